//! The textbook Drinfeld double D(G) = kG ⊗ (kG*)^cop of a finite group, written out from its
//! defining formulas on the basis g ⊗ f_h with integer matrices.
//!
//! Basis vector g ⊗ f_h has index g·n + (n-1-h): the dual basis vector f_h sits at position
//! n-1-h of the dual object, the position paired with h by evaluation.

use monadal::braided_double::BraidedDouble;
use monadal::{Mor, Report};

/// Dense integer matrix with `rows × cols` entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dense {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl Dense {
    fn zero(rows: usize, cols: usize) -> Dense {
        Dense { rows, cols, data: vec![0; rows * cols] }
    }

    fn add(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }
}

/// Structure constants of D(G): product, unit, coproduct, counit, antipode and R-matrix.
#[derive(Clone, Debug)]
pub struct ClassicalDouble {
    pub dim: usize,
    pub m: Dense,
    pub u: Dense,
    pub delta: Dense,
    pub eps: Dense,
    pub s: Dense,
    pub r: Dense,
}

/// Builds D(G) from a Cayley table with identity 0.
pub fn drinfeld_double(cayley: &[Vec<u32>]) -> ClassicalDouble {
    let n = cayley.len();
    let mul = |a: usize, b: usize| cayley[a][b] as usize;
    let inv = |a: usize| (0..n).find(|&b| mul(a, b) == 0).expect("group");
    let idx = |g: usize, h: usize| g * n + (n - 1 - h);
    let dim = n * n;

    // (g ⊗ f_h)(g' ⊗ f_h') = δ_{g'⁻¹hg', h'} gg' ⊗ f_h'
    let mut m = Dense::zero(dim, dim * dim);
    for g in 0..n {
        for h in 0..n {
            for g2 in 0..n {
                for h2 in 0..n {
                    if mul(mul(inv(g2), h), g2) == h2 {
                        m.add(idx(mul(g, g2), h2), idx(g, h) * dim + idx(g2, h2), 1);
                    }
                }
            }
        }
    }
    // 1 = e ⊗ Σ_h f_h
    let mut u = Dense::zero(dim, 1);
    for h in 0..n {
        u.add(idx(0, h), 0, 1);
    }
    // Δ(g ⊗ f_h) = Σ_{ab = h} (g ⊗ f_b) ⊗ (g ⊗ f_a)
    let mut delta = Dense::zero(dim * dim, dim);
    for g in 0..n {
        for a in 0..n {
            for b in 0..n {
                delta.add(idx(g, b) * dim + idx(g, a), idx(g, mul(a, b)), 1);
            }
        }
    }
    // ε(g ⊗ f_h) = δ_{h,e}
    let mut eps = Dense::zero(1, dim);
    for g in 0..n {
        eps.add(0, idx(g, 0), 1);
    }
    // S(g ⊗ f_h) = g⁻¹ ⊗ f_{g h⁻¹ g⁻¹}
    let mut s = Dense::zero(dim, dim);
    for g in 0..n {
        for h in 0..n {
            s.add(idx(inv(g), mul(mul(g, inv(h)), inv(g))), idx(g, h), 1);
        }
    }
    // r = Σ_g (g ⊗ ε) ⊗ (e ⊗ f_g), where ε = Σ_h f_h is the unit of kG*
    let mut r = Dense::zero(dim * dim, 1);
    for g in 0..n {
        for h in 0..n {
            r.add(idx(g, h) * dim + idx(0, g), 0, 1);
        }
    }
    ClassicalDouble { dim, m, u, delta, eps, s, r }
}

/// Reads an integral morphism as a dense matrix; `None` if some entry is not an integer.
pub fn dense(f: &Mor) -> Option<Dense> {
    let (rows, cols) = (f.dst.len(), f.src.len());
    let mut out = Dense::zero(rows, cols);
    for (r, c, v) in f.entries() {
        out.data[r * cols + c] = v.render().parse().ok()?;
    }
    Some(out)
}

/// Compares D(kG) and its R-matrix with the textbook double of the group with Cayley table
/// `cayley`, one check per structure morphism.
pub fn compare_with_oracle(bd: &BraidedDouble, name: &str, cayley: &[Vec<u32>]) -> Report {
    let mut rep = Report::new("classical_oracle");
    let want = drinfeld_double(cayley);
    let d = &bd.da;
    rep.push("oracle_dimension", name, d.dim() == want.dim, Some(format!("dim D = {}, oracle {}", d.dim(), want.dim)));
    for (what, got, exp) in [
        ("m", &d.m, &want.m),
        ("u", &d.u, &want.u),
        ("delta", &d.delta, &want.delta),
        ("eps", &d.eps, &want.eps),
        ("S", &d.s, &want.s),
        ("r", &bd.r, &want.r),
    ] {
        let g = dense(got);
        let detail = match &g {
            None => "non-integral entry".to_string(),
            Some(g) if g.rows != exp.rows || g.cols != exp.cols => {
                format!("shape {}x{} vs {}x{}", g.rows, g.cols, exp.rows, exp.cols)
            }
            Some(g) => match g.data.iter().zip(&exp.data).position(|(a, b)| a != b) {
                Some(k) => format!("entry ({},{}): {} vs {}", k / g.cols, k % g.cols, g.data[k], exp.data[k]),
                None => String::new(),
            },
        };
        rep.push(format!("oracle_{what}"), name, g.as_ref() == Some(exp), Some(detail));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: u32) -> Vec<Vec<u32>> {
        (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
    }

    #[test]
    fn unit_and_counit_laws() {
        let d = drinfeld_double(&cyclic(3));
        let dim = d.dim;
        // m(1 ⊗ x) = x and ε(xy) = ε(x)ε(y) on basis vectors
        for x in 0..dim {
            for y in 0..dim {
                let mut img = vec![0; dim];
                for k in 0..dim {
                    for a in 0..dim {
                        img[k] += d.m.get(k, a * dim + x) * d.u.get(a, 0);
                    }
                }
                assert_eq!(img.iter().enumerate().filter(|(_, &v)| v != 0).collect::<Vec<_>>(), vec![(x, &1)]);
                let exy: i64 = (0..dim).map(|k| d.eps.get(0, k) * d.m.get(k, x * dim + y)).sum();
                assert_eq!(exy, d.eps.get(0, x) * d.eps.get(0, y));
            }
        }
    }
}
