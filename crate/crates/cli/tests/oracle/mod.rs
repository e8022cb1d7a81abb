//! Independent reference computations: naive, slow and easy to audit.

#![allow(dead_code)]

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use twisted_k3::{Int, Rat};

pub type Mat = Vec<Vec<Rat>>;

pub fn ri(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn to_mat(rows: &[Vec<Int>]) -> Mat {
    rows.iter()
        .map(|r| r.iter().cloned().map(Rat::from_integer).collect())
        .collect()
}

pub fn form(g: &Mat, a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (i, row) in g.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            acc += &a[i] * x * &b[j];
        }
    }
    acc
}

/// Cohomology element `(h0, h2, h4)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coh {
    pub h0: Rat,
    pub h2: Vec<Rat>,
    pub h4: Rat,
}

/// Cup product on `H⁰ ⊕ H² ⊕ H⁴`.
pub fn cup(a: &Coh, b: &Coh, g: &Mat) -> Coh {
    Coh {
        h0: &a.h0 * &b.h0,
        h2: a.h2.iter().zip(&b.h2).map(|(x, y)| &a.h0 * y + x * &b.h0).collect(),
        h4: &a.h0 * &b.h4 + &a.h4 * &b.h0 + form(g, &a.h2, &b.h2),
    }
}

/// `exp(B) = 1 + B + B·B/2` computed through the cup product.
pub fn exp_class(b: &[Rat], g: &Mat) -> Coh {
    let bb = Coh {
        h0: Rat::zero(),
        h2: b.to_vec(),
        h4: Rat::zero(),
    };
    let sq = cup(&bb, &bb, g);
    Coh {
        h0: Rat::one(),
        h2: b.to_vec(),
        h4: sq.h4 / ri(2),
    }
}

/// `⟨v, w⟩ = −∫ v^∨ w`.
pub fn mukai_form(v: &Coh, w: &Coh, g: &Mat) -> Rat {
    let dual = Coh {
        h0: v.h0.clone(),
        h2: v.h2.iter().map(|x| -x).collect(),
        h4: v.h4.clone(),
    };
    -cup(&dual, w, g).h4
}

pub fn det(m: &Mat) -> Rat {
    let n = m.len();
    let mut a = m.clone();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &a[c][k] * &f;
                a[r][k] -= v;
            }
        }
    }
    d
}

pub fn inverse(m: &Mat) -> Option<Mat> {
    let n = m.len();
    let mut a: Mat = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let v = &a[c][k] * &f;
                    a[r][k] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).fold(Rat::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Characteristic polynomial `det(xI − m)` of an integer matrix by
/// Faddeev–LeVerrier, leading coefficient first.
pub fn charpoly(m: &Mat) -> Vec<Rat> {
    let n = m.len();
    let a: Vec<Vec<Int>> = m
        .iter()
        .map(|r| r.iter().map(|x| { assert!(x.is_integer()); x.to_integer() }).collect())
        .collect();
    let mut coeffs = vec![Int::one()];
    let mut mk: Vec<Vec<Int>> = vec![vec![Int::zero(); n]; n];
    let mut c = Int::one();
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1} I
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c;
        }
        let am: Vec<Vec<Int>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).filter(|&l| !a[i][l].is_zero()).fold(Int::zero(), |acc, l| acc + &a[i][l] * &mk[l][j]))
                    .collect()
            })
            .collect();
        let tr = (0..n).fold(Int::zero(), |acc, i| acc + &am[i][i]);
        let (q, rem) = tr.div_rem(&Int::from(k));
        assert!(rem.is_zero());
        c = -q;
        coeffs.push(c.clone());
        mk = am;
    }
    coeffs.into_iter().map(Rat::from_integer).collect()
}

fn sign_changes(p: &[Rat]) -> usize {
    let signs: Vec<bool> = p.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `(pos, neg, zero)` from Descartes' rule, exact for the real-rooted
/// characteristic polynomial of a symmetric matrix.
pub fn descartes_signature(g: &Mat) -> (usize, usize, usize) {
    let p = charpoly(g);
    let n = p.len() - 1;
    let zero = p.iter().rev().take_while(|x| x.is_zero()).count();
    let pos = sign_changes(&p);
    let neg_poly: Vec<Rat> = p
        .iter()
        .enumerate()
        .map(|(i, x)| if (n - i) % 2 == 1 { -x } else { x.clone() })
        .collect();
    (pos, sign_changes(&neg_poly), zero)
}

pub fn isqrt_floor(q: &Rat) -> i64 {
    let f = q.floor().to_integer().to_i64().expect("small box");
    let mut k = (f.max(0) as f64).sqrt() as i64 + 2;
    while ri(k * k) > *q {
        k -= 1;
    }
    k.max(0)
}

fn sign_normalized(mut v: Vec<i64>) -> Vec<i64> {
    if v.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

fn boxed(n: usize, half: &[i64], mut f: impl FnMut(&[i64])) {
    let mut x: Vec<i64> = half.iter().map(|h| -h).collect();
    loop {
        f(&x);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if x[i] < half[i] {
                x[i] += 1;
                break;
            }
            x[i] = -half[i];
            i += 1;
        }
    }
}

fn ratv(x: &[i64]) -> Vec<Rat> {
    x.iter().map(|&v| ri(v)).collect()
}

/// Box half-widths `⌊√(R · (Q⁻¹)ᵢᵢ)⌋` for a positive-definite `Q`.
pub fn box_for(q: &Mat, radius: &Rat) -> Vec<i64> {
    let inv = inverse(q).expect("definite");
    (0..q.len()).map(|i| isqrt_floor(&(radius * &inv[i][i]))).collect()
}

/// Sorted, sign-normalized nonzero `x` with `xᵀ g x ≤ bound`, by exhaustive search.
pub fn brute_short_vectors(g: &Mat, bound: &Rat) -> Vec<Vec<i64>> {
    let half = box_for(g, bound);
    let mut out = Vec::new();
    boxed(g.len(), &half, |x| {
        if x.iter().any(|v| *v != 0) {
            let xv = ratv(x);
            if form(g, &xv, &xv) <= *bound {
                out.push(sign_normalized(x.to_vec()));
            }
        }
    });
    out.sort();
    out.dedup();
    out
}

fn gcd_all(x: &[i64]) -> i64 {
    x.iter().fold(0i64, |a, b| a.gcd(b))
}

/// `q_P(x) = 2(x,P)²/(P,P) − (x,x)` as a matrix.
pub fn majorant(g: &Mat, p: &[i64]) -> Mat {
    let pv = ratv(p);
    let pp = form(g, &pv, &pv);
    let n = g.len();
    let gp: Vec<Rat> = (0..n).map(|i| (0..n).fold(Rat::zero(), |a, j| a + &g[i][j] * &pv[j])).collect();
    (0..n)
        .map(|i| (0..n).map(|j| ri(2) * &gp[i] * &gp[j] / &pp - &g[i][j]).collect())
        .collect()
}

/// `(xi, norm, on_endpoint)` triples, sorted by `(norm, xi)`.
pub type WallList = Vec<(i64, Vec<i64>, bool)>;

/// Walls meeting `[h0, h1]` by exhaustive search over a generous box.
///
/// The box is sized from `q_{H0}` with radius `B(1 + 2C/(H0,H0))`, with `C`
/// bounded by sampling `(H_t, H_t)` at its exact minimum, then doubled.
pub fn brute_walls(g: &Mat, h0: &[i64], h1: &[i64], bound: &Rat) -> WallList {
    if !bound.is_positive() {
        return Vec::new();
    }
    let (a, b, c) = {
        let (x, y) = (ratv(h0), ratv(h1));
        (form(g, &x, &x), form(g, &x, &y), form(g, &y, &y))
    };
    // min of a(1−t)² + 2bt(1−t) + ct² on [0, 1], by checking the vertex.
    let mut m = a.clone().min(c.clone());
    let quad = &a - ri(2) * &b + &c;
    if quad.is_positive() {
        let t = (&a - &b) / &quad;
        if t.is_positive() && t < Rat::one() {
            let f = &a * (Rat::one() - &t) * (Rat::one() - &t) + ri(2) * &b * &t * (Rat::one() - &t) + &c * &t * &t;
            m = m.min(f);
        }
    }
    let cmax = ri(2) * (&a * &a).max(&b * &b) / m - &a;
    let radius = ri(2) * (bound + ri(2) * bound * cmax / &a);
    let q = majorant(g, h0);
    let half = box_for(&q, &radius);
    let mut out = Vec::new();
    let gi: Vec<Vec<i128>> = g.iter().map(|r| r.iter().map(|x| x.to_integer().to_i128().unwrap()).collect()).collect();
    let pair = |a: &[i64], b: &[i64]| -> i128 {
        (0..a.len()).map(|i| (0..b.len()).map(|j| a[i] as i128 * gi[i][j] * b[j] as i128).sum::<i128>()).sum()
    };
    let (num, den) = (bound.numer().to_i128().unwrap(), bound.denom().to_i128().unwrap());
    boxed(g.len(), &half, |x| {
        let norm = -pair(x, x);
        if norm <= 0 || norm * den > num {
            return;
        }
        let (s0, s1) = (pair(x, h0), pair(x, h1));
        if s0.signum() * s1.signum() > 0 || gcd_all(x) != 1 {
            return;
        }
        let flip = s0 < 0 || (s0 == 0 && x.iter().find(|v| **v != 0).is_some_and(|v| *v < 0));
        let xi: Vec<i64> = x.iter().map(|v| if flip { -v } else { *v }).collect();
        out.push((norm as i64, xi, s0 == 0 || s1 == 0));
    });
    out.sort();
    out.dedup();
    out
}

/// Walls through `h` by exhaustive search; `q_H = −(x,x)` on `H^⊥`.
pub fn brute_general(g: &Mat, h: &[i64], bound: &Rat) -> WallList {
    brute_walls(g, h, h, bound)
}

/// Determinant with one row and one column removed.
pub fn minor(m: &Mat, skip_row: usize, skip_col: usize) -> Rat {
    let sub: Mat = m
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect();
    det(&sub)
}

pub fn int_gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}
