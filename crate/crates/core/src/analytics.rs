//! Transfer matrices, exact dominant eigenvalues, certified growth rates and
//! the closed-form bounds.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::counting::Count;
use crate::error::{Error, Result};
use crate::interval::{self, Enclosure};
use crate::pslg::Pslg;

/// 2x2 integer matrix; `entries[row][col]`, rows index targets and columns
/// sources when applied to a column vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    pub entries: [[BigInt; 2]; 2],
    pub level: u32,
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

impl TransferMatrix {
    pub fn from_i64(e: [[i64; 2]; 2], level: u32) -> Self {
        TransferMatrix {
            entries: [[int(e[0][0]), int(e[0][1])], [int(e[1][0]), int(e[1][1])]],
            level,
        }
    }

    pub fn identity() -> Self {
        TransferMatrix::from_i64([[1, 0], [0, 1]], 0)
    }

    pub fn mul(&self, o: &TransferMatrix) -> TransferMatrix {
        let a = &self.entries;
        let b = &o.entries;
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        TransferMatrix {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            level: self.level,
        }
    }

    pub fn pow(&self, mut e: u64) -> TransferMatrix {
        let mut base = self.clone();
        let mut acc = TransferMatrix {
            level: self.level,
            ..TransferMatrix::identity()
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn apply(&self, v: &[BigInt; 2]) -> [BigInt; 2] {
        let a = &self.entries;
        [
            &a[0][0] * &v[0] + &a[0][1] * &v[1],
            &a[1][0] * &v[0] + &a[1][1] * &v[1],
        ]
    }

    pub fn trace(&self) -> BigInt {
        &self.entries[0][0] + &self.entries[1][1]
    }
}

impl fmt::Display for TransferMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            e[0][0], e[0][1], e[1][0], e[1][1]
        )
    }
}

/// `M_2 = [[2, 1], [1, 1]]` and `M_k = M_{k-1}^2 + [[1, 0], [1, 1]]`.
pub fn transfer_matrix(k: u32) -> Result<TransferMatrix> {
    if k < 2 {
        return Err(Error::Precondition(
            "transfer matrices start at k = 2".into(),
        ));
    }
    if k > 40 {
        return Err(Error::Precondition(format!("k = {k} is too large")));
    }
    let mut m = TransferMatrix::from_i64([[2, 1], [1, 1]], 2);
    for level in 3..=k {
        let sq = m.mul(&m);
        let e = sq.entries;
        let [[a, b], [c, d]] = e;
        m = TransferMatrix {
            entries: [[a + 1, b], [c + 1, d + 1]],
            level,
        };
    }
    Ok(m)
}

/// `(p + q sqrt(r)) / s` with `r` square-free (or zero), `s > 0`, `q >= 0`
/// and `gcd(p, q, s) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub s: BigInt,
}

/// Splits `v` into `(f, c)` with `v = f^2 c`. Trial division runs up to
/// `2^20`; past that only a whole-remainder square is detected, so `c` is
/// square-free whenever `v` has no repeated prime above `2^20` besides that case.
fn square_part(v: &BigUint) -> (BigUint, BigUint) {
    const TRIAL_LIMIT: u64 = 1 << 20;
    let mut rest = v.clone();
    let mut f = BigUint::one();
    let mut d: u64 = 2;
    while d <= TRIAL_LIMIT && BigUint::from(d * d) <= rest {
        while (&rest % (d * d)).is_zero() {
            rest /= d * d;
            f *= d;
        }
        d += 1;
    }
    if let Some(root) = interval::exact_sqrt(&rest) {
        f *= &root;
        rest = BigUint::one();
    }
    (f, rest)
}

impl QuadraticSurd {
    /// Canonicalizes `(p + q sqrt(r)) / s`.
    pub fn new(p: BigInt, q: BigInt, r: BigInt, s: BigInt) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        if r.is_negative() {
            return Err(Error::Precondition("negative radicand".into()));
        }
        let (mut p, mut q, mut r, mut s) = (p, q, r, s);
        if r.is_zero() || q.is_zero() {
            q = BigInt::zero();
            r = BigInt::zero();
        } else {
            let (f, c) = square_part(&r.to_biguint().unwrap());
            q *= BigInt::from(f);
            r = BigInt::from(c);
            if r.is_one() {
                p += &q;
                q = BigInt::zero();
                r = BigInt::zero();
            }
        }
        if s.is_negative() {
            p = -p;
            q = -q;
            s = -s;
        }
        if q.is_negative() {
            // only a sign convention on the radical term; keep value
            return Err(Error::Precondition("negative radical coefficient".into()));
        }
        let g = p.gcd(&q).gcd(&s);
        if !g.is_zero() && !g.is_one() {
            p /= &g;
            q /= &g;
            s /= &g;
        }
        Ok(QuadraticSurd { p, q, r, s })
    }

    pub fn from_ints(p: i64, q: i64, r: i64, s: i64) -> Result<Self> {
        QuadraticSurd::new(int(p), int(q), int(r), int(s))
    }

    /// Certified enclosure with width below `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> Enclosure {
        let s = BigRational::from_integer(self.s.clone());
        let p = BigRational::from_integer(self.p.clone()) / &s;
        if self.q.is_zero() {
            return Enclosure::exact(p);
        }
        let qs = BigRational::from_integer(self.q.clone()) / &s;
        let extra = qs.to_integer().bits() as u32 + 2;
        let (lo, hi) =
            interval::sqrt_bounds(&BigRational::from_integer(self.r.clone()), bits + extra);
        Enclosure::new(&p + &qs * lo, &p + &qs * hi)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.p, self.q, self.r, self.s)
    }
}

/// Largest eigenvalue `(tr + sqrt((a - d)^2 + 4bc)) / 2`.
pub fn dominant_eigenvalue(m: &TransferMatrix) -> Result<QuadraticSurd> {
    let [[a, b], [c, d]] = &m.entries;
    let disc = (a - d) * (a - d) + int(4) * b * c;
    if disc.is_negative() {
        return Err(Error::Precondition("complex eigenvalues".into()));
    }
    QuadraticSurd::new(m.trace(), BigInt::one(), disc, int(2))
}

/// Square root of an enclosure of a nonnegative value, rounded outward.
fn sqrt_enclosure(e: &Enclosure, bits: u32) -> Enclosure {
    let (lo, _) = interval::sqrt_bounds(&e.lo, bits);
    let (_, hi) = interval::sqrt_bounds(&e.hi, bits);
    Enclosure::new(lo, hi)
}

/// `lambda(M_k)^(1/2^(k-1))` with certified width below `2^-precision_bits`.
pub fn growth_rate(k: u32, precision_bits: u32) -> Result<Enclosure> {
    let lambda = dominant_eigenvalue(&transfer_matrix(k)?)?;
    let mut work = precision_bits + 8;
    loop {
        // each square root at most halves the width of a value above 1
        let mut e = lambda.enclosure(work);
        for _ in 1..k {
            e = sqrt_enclosure(&e, work + 2);
        }
        if e.is_tighter_than(precision_bits) {
            return Ok(e);
        }
        work *= 2;
    }
}

pub fn fibonacci(n: u64) -> Result<Count> {
    if n < 1 {
        return Err(Error::Precondition(
            "Fibonacci numbers start at index 1".into(),
        ));
    }
    let (mut a, mut b) = (Count::one(), Count::one());
    for _ in 2..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    Ok(b)
}

/// `B(1) = B(2) = 1`, `B(3) = 2`, `B(i) = B(i-1) + B(i-2) + B(i-3)`.
pub fn tribonacci_sequence(n: usize) -> Result<Vec<Count>> {
    if n < 1 {
        return Err(Error::Precondition(
            "tribonacci numbers start at index 1".into(),
        ));
    }
    let mut b: Vec<Count> = vec![Count::one(), Count::one(), Count::from(2u32)];
    while b.len() < n {
        let l = b.len();
        let next = &b[l - 1] + &b[l - 2] + &b[l - 3];
        b.push(next);
    }
    b.truncate(n);
    Ok(b)
}

pub fn tribonacci_bound(n: usize) -> Result<Count> {
    Ok(tribonacci_sequence(n)?.pop().unwrap())
}

/// `sum_{i <= n} B(i)`.
pub fn tribonacci_prefix_sum(n: usize) -> Result<Count> {
    Ok(tribonacci_sequence(n)?.into_iter().sum())
}

/// `sum_{i <= n} (C(i) - 1)` with `C(i) = B(1) + ... + B(i)`: the number of
/// paths with at least one edge when every vertex has out-edges of lengths
/// 1, 2 and 3 only, which dominates any left-to-right multigraph whose
/// out-edge lengths sorted per vertex are at least 1, 2, 3.
pub fn reduced_path_bound(n: usize) -> Result<Count> {
    let b = tribonacci_sequence(n)?;
    let mut c = Count::zero();
    let mut total = Count::zero();
    for x in b {
        c += x;
        total += &c - 1u32;
    }
    Ok(total)
}

fn cubic(x: &BigRational) -> BigRational {
    x * x * x - x * x - x - BigRational::one()
}

/// Enclosure of the real root of `x^3 - x^2 - x - 1` by rational bisection.
pub fn tribonacci_root(precision_bits: u32) -> Enclosure {
    let mut lo = BigRational::new(int(9), int(5));
    let mut hi = BigRational::new(int(19), int(10));
    let two = BigRational::from_integer(int(2));
    while !(&hi - &lo < interval::pow2_neg(precision_bits)) {
        let mid = (&lo + &hi) / &two;
        let v = cubic(&mid);
        if v.is_zero() {
            return Enclosure::exact(mid);
        }
        if v.is_positive() {
            hi = mid;
        } else {
            lo = mid;
        }
        lo = interval::round_down(&lo, precision_bits + 2);
        hi = interval::round_up(&hi, precision_bits + 2);
    }
    Enclosure::new(lo, hi)
}

/// Certified enclosures of the tribonacci constant and the golden ratio.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthConstants {
    pub alpha: Enclosure,
    pub phi: Enclosure,
}

pub fn growth_constants(precision_bits: u32) -> GrowthConstants {
    let phi = QuadraticSurd::from_ints(1, 1, 5, 2)
        .expect("valid surd")
        .enclosure(precision_bits);
    GrowthConstants {
        alpha: tribonacci_root(precision_bits),
        phi,
    }
}

/// `3n + 4k - 14 + 2(k - 3)^2 / n`.
pub fn star_lb_bound(n: u64, k: u64) -> Result<BigRational> {
    if n < 3 || k + 3 > n {
        return Err(Error::Precondition(format!(
            "need n >= 3 and 0 <= k <= n - 3, got n = {n}, k = {k}"
        )));
    }
    let (n, k) = (int(n as i64), int(k as i64));
    let km3 = &k - int(3);
    Ok(
        BigRational::from_integer(int(3) * &n + int(4) * &k - int(14))
            + BigRational::new(int(2) * &km3 * &km3, n),
    )
}

pub fn ceil_rational(r: &BigRational) -> BigInt {
    r.ceil().to_integer()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedPathBound {
    /// `ceil((3n / l)^l)`.
    pub product_bound: Count,
    /// `n^2 3^n`.
    pub global_cap: Count,
}

pub fn directed_path_bound(n: u64, l: u64) -> Result<DirectedPathBound> {
    if l < 1 || l > n {
        return Err(Error::Precondition(format!(
            "need 1 <= l <= n, got n = {n}, l = {l}"
        )));
    }
    let base = BigRational::new(int(3 * n as i64), int(l as i64));
    let mut p = BigRational::one();
    for _ in 0..l {
        p *= &base;
    }
    let product_bound = p.ceil().to_integer().to_biguint().expect("positive");
    let global_cap = Count::from(n) * Count::from(n) * Count::from(3u32).pow(n as u32);
    Ok(DirectedPathBound {
        product_bound,
        global_cap,
    })
}

/// `exp` of the least-squares slope of `ln(count)` against `n`.
pub fn estimate_growth(sizes: &[u64], counts: &[Count]) -> Result<f64> {
    if sizes.len() != counts.len() || sizes.len() < 3 {
        return Err(Error::Precondition(
            "need at least three (n, count) pairs".into(),
        ));
    }
    if counts.iter().any(Zero::is_zero) {
        return Err(Error::Precondition("counts must be positive".into()));
    }
    let xs: Vec<f64> = sizes.iter().map(|&n| n as f64).collect();
    let ys: Vec<f64> = counts.iter().map(interval::ln_biguint).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::Precondition("sizes must not all be equal".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    Ok((sxy / sxx).exp())
}

/// Routing counts through one group `a, a+1, ..., a+span+1` of a
/// left-to-right graph, for `span = 2^(k-1)`. Column 0 counts routes leaving
/// the group's first vertex `a`, column 1 routes leaving `a + 1`; row 0 counts
/// routes ending at `a' = a + span` and row 1 routes ending at `a' + 1`
/// without passing `a'`.
pub fn measure_group_matrix(g: &Pslg, a: usize, span: usize) -> Result<[[Count; 2]; 2]> {
    let end = a + span + 1;
    if span < 1 || end >= g.n() {
        return Err(Error::Precondition("group exceeds the graph".into()));
    }
    let ways = |src: usize| -> Vec<Count> {
        let mut w = vec![Count::zero(); end + 1];
        w[src] = Count::one();
        let mut out = vec![Vec::new(); end + 1];
        for &(p, q) in &g.edges {
            let (lo, hi) = (p.min(q), p.max(q));
            if lo >= a && hi <= end {
                out[lo].push(hi);
            }
        }
        for v in src..=end {
            if w[v].is_zero() {
                continue;
            }
            let c = w[v].clone();
            for &x in &out[v] {
                w[x] += &c;
            }
        }
        w
    };
    let col = |src: usize| -> [Count; 2] {
        let w = ways(src);
        let to_a = w[end - 1].clone();
        [to_a.clone(), &w[end] - &to_a]
    };
    let c0 = col(a);
    let c1 = col(a + 1);
    Ok([
        [c0[0].clone(), c1[0].clone()],
        [c0[1].clone(), c1[1].clone()],
    ])
}

/// `(routes ending at v_{n-1}, routes ending at v_n not via v_{n-1})`
/// for left-to-right routes starting at `v_1` or `v_2`; a route may be a
/// single vertex.
pub fn measure_boundary_vector(g: &Pslg) -> [Count; 2] {
    let n = g.n();
    let mut out = vec![Vec::new(); n];
    for &(p, q) in &g.edges {
        out[p.min(q)].push(p.max(q));
    }
    let mut w = vec![Count::zero(); n];
    w[0] = Count::one();
    w[1] = Count::one();
    for v in 0..n {
        let c = w[v].clone();
        if c.is_zero() {
            continue;
        }
        for &x in &out[v] {
            w[x] += &c;
        }
    }
    let a = w[n - 2].clone();
    [a.clone(), &w[n - 1] - &a]
}

pub fn to_counts(v: &[BigInt; 2]) -> [Count; 2] {
    [
        v[0].to_biguint().expect("nonnegative"),
        v[1].to_biguint().expect("nonnegative"),
    ]
}

pub fn matrix_counts(m: &TransferMatrix) -> [[Count; 2]; 2] {
    let e = &m.entries;
    let c = |x: &BigInt| -> Count {
        x.to_biguint()
            .expect("transfer matrix entries are nonnegative")
    };
    [[c(&e[0][0]), c(&e[0][1])], [c(&e[1][0]), c(&e[1][1])]]
}

pub fn enclosure_f64(e: &Enclosure) -> f64 {
    e.midpoint().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transfer_matrix_examples() {
        assert_eq!(
            transfer_matrix(2).unwrap(),
            TransferMatrix::from_i64([[2, 1], [1, 1]], 2)
        );
        assert_eq!(
            transfer_matrix(3).unwrap(),
            TransferMatrix::from_i64([[6, 3], [4, 3]], 3)
        );
        assert_eq!(transfer_matrix(5).unwrap().trace(), int(4885));
        assert!(transfer_matrix(1).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let l2 = dominant_eigenvalue(&transfer_matrix(2).unwrap()).unwrap();
        assert_eq!(l2, QuadraticSurd::from_ints(3, 1, 5, 2).unwrap());
        let l5 = dominant_eigenvalue(&transfer_matrix(5).unwrap()).unwrap();
        assert_eq!(
            (l5.p.clone(), l5.q.clone(), l5.r.clone(), l5.s.clone()),
            (int(4885), int(9), int(294153), int(2))
        );
        let id = dominant_eigenvalue(&TransferMatrix::identity()).unwrap();
        assert_eq!(id, QuadraticSurd::from_ints(1, 0, 0, 1).unwrap());
    }

    #[test]
    fn surd_canonical_form() {
        assert_eq!(
            QuadraticSurd::from_ints(2, 2, 8, 4).unwrap(),
            QuadraticSurd::from_ints(1, 2, 2, 2).unwrap()
        );
        assert_eq!(
            QuadraticSurd::from_ints(1, 1, 9, -2).unwrap(),
            QuadraticSurd::from_ints(-2, 0, 0, 1).unwrap()
        );
        assert!(QuadraticSurd::from_ints(1, 1, 5, 0).is_err());
    }

    #[test]
    fn growth_rate_small() {
        let e = growth_rate(2, 40).unwrap();
        assert!(e.is_tighter_than(40));
        assert_eq!(e.to_decimal(5), "1.61803");
        assert_eq!(growth_rate(4, 40).unwrap().to_decimal(5), "1.70034");
    }

    #[test]
    fn sequences() {
        assert_eq!(tribonacci_bound(6).unwrap(), Count::from(13u32));
        assert_eq!(fibonacci(6).unwrap(), Count::from(8u32));
        assert!(fibonacci(0).is_err());
        assert!(tribonacci_bound(0).is_err());
        assert_eq!(tribonacci_prefix_sum(4).unwrap(), Count::from(8u32));
        assert_eq!(reduced_path_bound(4).unwrap(), Count::from(11u32));
        let b = tribonacci_sequence(60).unwrap();
        let ratio = b[59].to_f64().unwrap() / b[58].to_f64().unwrap();
        assert!((ratio - 1.839286755).abs() < 1e-6);
    }

    #[test]
    fn tribonacci_root_is_certified() {
        let e = tribonacci_root(20);
        assert!((e.to_f64() - 1.8392).abs() < 1e-4);
        let tight = tribonacci_root(64);
        assert!(e.contains_enclosure(&tight));
        assert!(cubic(&tight.lo).is_negative() && cubic(&tight.hi).is_positive());
        let c = growth_constants(30);
        assert!((c.phi.to_f64() - 1.6180339887).abs() < 1e-8);
    }

    #[test]
    fn bound_examples() {
        assert_eq!(
            star_lb_bound(10, 0).unwrap(),
            BigRational::new(int(89), int(5))
        );
        assert_eq!(
            star_lb_bound(3, 0).unwrap(),
            BigRational::from_integer(int(1))
        );
        assert!(star_lb_bound(3, 1).is_err());
        let d = directed_path_bound(4, 2).unwrap();
        assert_eq!(d.product_bound, Count::from(36u32));
        assert_eq!(
            directed_path_bound(5, 5).unwrap().product_bound,
            Count::from(243u32)
        );
        assert_eq!(d.global_cap, Count::from(16u32 * 81));
    }

    #[test]
    fn group_matrices_match_recurrence() {
        use crate::constructions::gen_gk;
        for k in 2..=5u32 {
            let span = 1usize << (k - 1);
            let m = matrix_counts(&transfer_matrix(k).unwrap());
            for l in k..=6 {
                let g = gen_gk(l, k).unwrap();
                let mut a = 0;
                while a + span + 1 < g.n() {
                    assert_eq!(
                        measure_group_matrix(&g, a, span).unwrap(),
                        m,
                        "k={k} l={l} a={a}"
                    );
                    a += span;
                }
            }
        }
    }

    #[test]
    fn boundary_vector_is_matrix_power() {
        use crate::constructions::gen_gk;
        for k in 2..=5u32 {
            for l in (k - 1)..=7 {
                let g = gen_gk(l, k - 1).unwrap();
                let groups = ((g.n() - 2) >> (k - 1)) as u64;
                let v = transfer_matrix(k)
                    .unwrap()
                    .pow(groups)
                    .apply(&[int(1), int(1)]);
                assert_eq!(measure_boundary_vector(&g), to_counts(&v), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn growth_estimates() {
        let sizes: Vec<u64> = (5..15).collect();
        let pow2: Vec<Count> = sizes.iter().map(|&n| Count::one() << n).collect();
        assert!((estimate_growth(&sizes, &pow2).unwrap() - 2.0).abs() < 1e-9);
        let flat = vec![Count::from(7u32); sizes.len()];
        assert!((estimate_growth(&sizes, &flat).unwrap() - 1.0).abs() < 1e-12);
        assert!(estimate_growth(&sizes[..2], &flat[..2]).is_err());
    }
}
