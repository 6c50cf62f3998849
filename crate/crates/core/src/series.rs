//! Truncated bivariate dimension series for extension groups between
//! two-row, two-column and hook shapes over a prime field, and the
//! univariate stable-cohomology polynomials they package.
//!
//! Everything is arithmetic in the quotient ring Z[t,u] / (t^{>t_max},
//! u^{>u_max}): a base infinite product A(t,u) = prod_{i>=1}
//! (1 + t u^{p^i}) / (1 - t^2 u^{p^i}), and a family E_k(t,u) computed two
//! independent ways — a closed sum indexed by the base-p digits of k, and a
//! recursion on floor(k/p) that substitutes u -> u^p.  The t-coefficient of
//! a fixed u-power of E_k is a dimension count, so coefficients are stored
//! unsigned, and the two evaluation strategies cross-check each other on
//! every window.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;

use crate::combinat::{base_p_digits, kbar, Partition};
use crate::error::{Error, Result};

/// Default truncation bound in the t (cohomological degree) direction.
pub const DEFAULT_T_MAX: usize = 32;
/// Default truncation bound in the u (weight gap) direction.
pub const DEFAULT_U_MAX: usize = 64;

/// A polynomial in t and u with nonnegative coefficients, truncated to the
/// window t-degree <= t_max, u-degree <= u_max.  Every series in this
/// module counts dimensions, so no signed arithmetic is ever needed; sums
/// and products silently drop terms that leave the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    t_max: usize,
    u_max: usize,
    coeffs: BTreeMap<(usize, usize), u64>,
}

impl BiPoly {
    pub fn zero(t_max: usize, u_max: usize) -> BiPoly {
        BiPoly {
            t_max,
            u_max,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(t_max: usize, u_max: usize) -> BiPoly {
        let mut out = BiPoly::zero(t_max, u_max);
        out.add_to(0, 0, 1);
        out
    }

    /// The truncation window (t_max, u_max).
    pub fn bounds(&self) -> (usize, usize) {
        (self.t_max, self.u_max)
    }

    /// Coefficient of t^t u^u; zero for absent or out-of-window monomials.
    pub fn coefficient(&self, t: usize, u: usize) -> u64 {
        self.coeffs.get(&(t, u)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Stored monomials as (t-degree, u-degree, coefficient), sorted.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.coeffs.iter().map(|(&(t, u), &c)| (t, u, c))
    }

    fn add_to(&mut self, t: usize, u: usize, c: u64) {
        if c == 0 || t > self.t_max || u > self.u_max {
            return;
        }
        *self.coeffs.entry((t, u)).or_insert(0) += c;
    }

    /// Sum, on the intersection of the two windows.
    pub fn plus(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero(self.t_max.min(other.t_max), self.u_max.min(other.u_max));
        for (t, u, c) in self.terms().chain(other.terms()) {
            out.add_to(t, u, c);
        }
        out
    }

    /// Product, on the intersection of the two windows.
    pub fn times(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero(self.t_max.min(other.t_max), self.u_max.min(other.u_max));
        for (t1, u1, c1) in self.terms() {
            if t1 > out.t_max || u1 > out.u_max {
                continue;
            }
            for (t2, u2, c2) in other.terms() {
                out.add_to(t1 + t2, u1 + u2, c1 * c2);
            }
        }
        out
    }

    /// Multiplication by the monomial t^dt u^du, keeping the window.
    pub fn shifted(&self, dt: usize, du: usize) -> BiPoly {
        let mut out = BiPoly::zero(self.t_max, self.u_max);
        for (t, u, c) in self.terms() {
            out.add_to(t + dt, u + du, c);
        }
        out
    }

    /// Substitution u -> u^e into a fresh window u-degree <= u_max.  The
    /// source must already be complete up to u-degree u_max / e for the
    /// result to be the honest truncation of the substituted series.
    pub fn substitute_u(&self, e: usize, u_max: usize) -> BiPoly {
        assert!(e >= 1, "substitution exponent must be positive");
        assert!(
            self.u_max >= u_max / e,
            "substitution source window too small: have {}, need {}",
            self.u_max,
            u_max / e
        );
        let mut out = BiPoly::zero(self.t_max, u_max);
        for (t, u, c) in self.terms() {
            out.add_to(t, u * e, c);
        }
        out
    }

    /// Equality of all coefficients on the intersection of the windows.
    pub fn agrees_with(&self, other: &BiPoly) -> bool {
        let tm = self.t_max.min(other.t_max);
        let um = self.u_max.min(other.u_max);
        for (t, u, c) in self.terms() {
            if t <= tm && u <= um && other.coefficient(t, u) != c {
                return false;
            }
        }
        for (t, u, c) in other.terms() {
            if t <= tm && u <= um && self.coefficient(t, u) != c {
                return false;
            }
        }
        true
    }

    /// The t-coefficient vector of a fixed u-power, trailing zeros trimmed.
    pub fn u_slice(&self, u: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.t_max + 1];
        for (t, uu, c) in self.terms() {
            if uu == u {
                out[t] = c;
            }
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self.terms().map(|(t, u, c)| json!([t, u, c])).collect();
        json!({ "tmax": self.t_max, "umax": self.u_max, "coeffs": coeffs })
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms()
            .map(|(t, u, c)| format!("{c} * t^{t} * u^{u}"))
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Truncated expansion of 1 / (1 - t^2 u^m) = sum_j t^{2j} u^{jm}.
fn even_geometric(m: usize, t_max: usize, u_max: usize) -> BiPoly {
    let mut out = BiPoly::zero(t_max, u_max);
    let mut j = 0usize;
    while 2 * j <= t_max && j * m <= u_max {
        out.add_to(2 * j, j * m, 1);
        j += 1;
    }
    out
}

/// The base product A(t,u) = prod_{i>=1} (1 + t u^{p^i}) / (1 - t^2 u^{p^i}),
/// truncated to the window.  Factors with p^i beyond the u-window are 1.
pub fn a_series(p: u64, t_max: usize, u_max: usize) -> BiPoly {
    assert!(p >= 2, "base must be at least 2");
    let mut out = BiPoly::one(t_max, u_max);
    let mut pw: u128 = 1;
    loop {
        pw *= p as u128;
        if pw > u_max as u128 {
            break;
        }
        let m = pw as usize;
        let geo = even_geometric(m, t_max, u_max);
        let factor = geo.plus(&geo.shifted(1, m));
        out = out.times(&factor);
    }
    out
}

/// Which of the two equivalent evaluation strategies to use for E_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesMethod {
    /// Digit-indexed sum: E_k = sum over i with k_i != p-1 of
    /// (u^{kbar(i-1)} + t u^{kbar(i)}) A(t, u^{p^i}).
    Closed,
    /// Recursion on l = floor(k/p): E_k = E_l(t, u^p) when the last digit
    /// is p-1, and u^{p-1-k_0} E_l(t, u^p) + (1 + t u^{p-1-k_0}) A(t, u)
    /// otherwise, memoized on (k, effective u-window).
    Recursive,
}

/// The series E_k(t,u) whose coefficient of t^j u^n counts degree-j
/// extensions from the symmetric power to the two-row Schur functor with
/// row gap k and second row n.
pub fn e_series(k: u64, p: u64, t_max: usize, u_max: usize, method: SeriesMethod) -> BiPoly {
    match method {
        SeriesMethod::Closed => e_series_closed(k, p, t_max, u_max),
        SeriesMethod::Recursive => {
            let mut memo = BTreeMap::new();
            e_series_recursive(k, p, t_max, u_max, &mut memo)
        }
    }
}

fn e_series_closed(k: u64, p: u64, t_max: usize, u_max: usize) -> BiPoly {
    let base = a_series(p, t_max, u_max);
    let digits = base_p_digits(k, p);
    let mut out = BiPoly::zero(t_max, u_max);
    let mut i: i64 = 0;
    loop {
        // kbar is nondecreasing in i, so once the plain u-power leaves the
        // window every later summand does too.
        let lo = kbar(k, p, i - 1);
        if lo > u_max as u64 {
            break;
        }
        let ki = digits.get(i as usize).copied().unwrap_or(0);
        if ki != p - 1 {
            let hi = kbar(k, p, i);
            let pw = (p as u128).pow(u32::try_from(i).expect("digit index fits u32"));
            let sub = if pw > u_max as u128 {
                BiPoly::one(t_max, u_max)
            } else {
                base.substitute_u(pw as usize, u_max)
            };
            out = out.plus(&sub.shifted(0, lo as usize));
            out = out.plus(&sub.shifted(1, usize::try_from(hi).expect("exponent fits usize")));
        }
        i += 1;
    }
    out
}

fn e_series_recursive(
    k: u64,
    p: u64,
    t_max: usize,
    u_window: usize,
    memo: &mut BTreeMap<(u64, usize), BiPoly>,
) -> BiPoly {
    if let Some(hit) = memo.get(&(k, u_window)) {
        return hit.clone();
    }
    let result = if u_window == 0 {
        // Only the constant term is visible, and it is 1 for every k.
        BiPoly::one(t_max, 0)
    } else {
        let k0 = k % p;
        let inner = e_series_recursive(k / p, p, t_max, u_window / p as usize, memo);
        let lifted = inner.substitute_u(p as usize, u_window);
        if k0 == p - 1 {
            lifted
        } else {
            let gap = (p - 1 - k0) as usize;
            let a = a_series(p, t_max, u_window);
            lifted.shifted(0, gap).plus(&a).plus(&a.shifted(1, gap))
        }
    };
    memo.insert((k, u_window), result.clone());
    result
}

/// The u-reindexed companion series t * u^{b+1} * E_b(t,u): the same
/// coefficients, placed so that the u-power reads off the full hook size.
pub fn n_series(b: u64, p: u64, t_max: usize, u_max: usize) -> BiPoly {
    e_series(b, p, t_max, u_max, SeriesMethod::Closed)
        .shifted(1, usize::try_from(b + 1).expect("leg count fits usize"))
}

/// Exponent of the largest power of p dividing x (x must be positive).
fn valuation(mut x: u64, p: u64) -> u32 {
    assert!(x > 0, "valuation of zero is infinite");
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Which pair shape a dimension query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtCase {
    /// Both shapes have at most two rows.
    TwoRow,
    /// Both shapes have all parts at most 2; equivalent to the two-row
    /// case through conjugation, with the roles of the shapes exchanged.
    TwoColumn,
    /// Both shapes are hooks (arm, 1^legs).
    Hook,
}

fn two_row_coefficient(
    big_a: u64,
    _big_b: u64,
    a: u64,
    b: u64,
    j: usize,
    p: u64,
) -> Result<u64> {
    if big_a < a {
        return Ok(0);
    }
    let du = usize::try_from(big_a - a).expect("row gap fits usize");
    let e = e_series(a - b, p, j, du, SeriesMethod::Closed);
    Ok(e.coefficient(j, du))
}

/// Dimension of the degree-j extension group between the Schur functors of
/// λ and μ, read off as a single series coefficient.  Two-row pairs (A,B),
/// (a,b) take the coefficient of t^j u^{A-a} in E_{a-b}; two-column pairs
/// conjugate into that case with the roles of the two shapes exchanged;
/// hook pairs (A,1^B), (a,1^b) take the coefficient of t^{A-a-j} u^{A-a}
/// in E_{a+B-1}.  Pairs ordered against dominance give 0.
pub fn ext_dim_formula(
    case: ExtCase,
    lambda: &Partition,
    mu: &Partition,
    j: usize,
    p: u64,
) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::ShapeMismatch(format!(
            "|{lambda}| = {} and |{mu}| = {} differ; the groups vanish trivially",
            lambda.size(),
            mu.size()
        )));
    }
    match case {
        ExtCase::TwoRow => {
            if lambda.len() > 2 || mu.len() > 2 {
                return Err(Error::ShapeMismatch(format!(
                    "two-row query needs at most two parts, got {lambda} and {mu}"
                )));
            }
            two_row_coefficient(
                lambda.part(0),
                lambda.part(1),
                mu.part(0),
                mu.part(1),
                j,
                p,
            )
        }
        ExtCase::TwoColumn => {
            if lambda.parts().iter().any(|&x| x > 2) || mu.parts().iter().any(|&x| x > 2) {
                return Err(Error::ShapeMismatch(format!(
                    "two-column query needs all parts at most 2, got {lambda} and {mu}"
                )));
            }
            let lt = lambda.conjugate();
            let mt = mu.conjugate();
            two_row_coefficient(mt.part(0), mt.part(1), lt.part(0), lt.part(1), j, p)
        }
        ExtCase::Hook => {
            let (big_a, big_b) = lambda.is_hook().ok_or_else(|| {
                Error::ShapeMismatch(format!("hook query needs hook shapes, got {lambda}"))
            })?;
            let (a, _b) = mu.is_hook().ok_or_else(|| {
                Error::ShapeMismatch(format!("hook query needs hook shapes, got {mu}"))
            })?;
            if big_a < a {
                return Ok(0);
            }
            let du = usize::try_from(big_a - a).expect("arm gap fits usize");
            if j > du {
                return Ok(0);
            }
            let k = a - 1 + big_b as u64;
            let e = e_series(k, p, du, du, SeriesMethod::Closed);
            Ok(e.coefficient(du - j, du))
        }
    }
}

/// Coefficient list (index = cohomological degree) of the stable cohomology
/// polynomial of the hook Schur functor (a, 1^b) over F_p: the u^{a-1}
/// slice of E_b, shifted up by t^{b+1}.  Trailing zeros are trimmed.
pub fn h_polynomial(a: u64, b: usize, p: u64, t_max: usize) -> Result<Vec<u64>> {
    if a < 1 {
        return Err(Error::IndexOutOfRange(
            "hook arm must be at least 1".into(),
        ));
    }
    let slice_u = usize::try_from(a - 1).expect("arm fits usize");
    let e = e_series(b as u64, p, t_max, slice_u, SeriesMethod::Closed);
    let mut out = vec![0u64; t_max + 1];
    for (t, u, c) in e.terms() {
        if u == slice_u && t + b < t_max {
            out[t + b + 1] = c;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

/// Whether the stable cohomology of the hook with arm n+1 and b = m-n legs
/// is nonzero over F_p: with q the largest p-power dividing m-n+1, this
/// happens exactly when pq divides n or pq divides m+1.
pub fn hook_nonvanishing(n: u64, m: u64, p: u64) -> Result<bool> {
    if n > m {
        return Err(Error::IndexOutOfRange(format!(
            "need m >= n, got n = {n}, m = {m}"
        )));
    }
    let q = p.pow(valuation(m - n + 1, p));
    let pq = p * q;
    Ok(n.is_multiple_of(pq) || (m + 1).is_multiple_of(pq))
}

/// Whether two two-row weights of the same size lie in the same block of
/// polynomial representations of the 2x2 general linear group over F_p:
/// the p-adic valuations of (first row - second row + 1) must match, and
/// the rows must be congruent mod p times that p-power either directly or
/// after the dot-twisted swap (A-1, B-2) ~ (b-2, a-1).
pub fn gl2_same_block(lambda: &Partition, mu: &Partition, p: u64) -> Result<bool> {
    if lambda.len() > 2 || mu.len() > 2 {
        return Err(Error::ShapeMismatch(format!(
            "block query needs at most two parts, got {lambda} and {mu}"
        )));
    }
    if lambda.size() != mu.size() {
        return Err(Error::ShapeMismatch(format!(
            "|{lambda}| = {} and |{mu}| = {} differ",
            lambda.size(),
            mu.size()
        )));
    }
    let (big_a, big_b) = (lambda.part(0) as i64, lambda.part(1) as i64);
    let (a, b) = (mu.part(0) as i64, mu.part(1) as i64);
    let vl = valuation((big_a - big_b + 1) as u64, p);
    let vm = valuation((a - b + 1) as u64, p);
    if vl != vm {
        return Ok(false);
    }
    let pq = (p as i64) * (p as i64).pow(vm);
    let direct = (big_a - a).rem_euclid(pq) == 0 && (big_b - b).rem_euclid(pq) == 0;
    let swapped =
        (big_a - 1 - (b - 2)).rem_euclid(pq) == 0 && (big_b - 2 - (a - 1)).rem_euclid(pq) == 0;
    Ok(direct || swapped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::RingSelector;
    use crate::speccomplex::ext_schur_query;
    use proptest::prelude::*;

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn product_series_frozen_slices() {
        for p in [2u64, 3, 5] {
            let a = a_series(p, 6, 40);
            assert_eq!(a.coefficient(0, 0), 1);
            // t-slice 1 is the sum of u^{p^i}.
            for u in 1..=40usize {
                let mut pw = p as usize;
                let mut hit = false;
                while pw <= 40 {
                    hit |= pw == u;
                    pw *= p as usize;
                }
                assert_eq!(a.coefficient(1, u), u64::from(hit), "p={p}, u={u}");
            }
        }
        // t-slice 2 at p = 2: single powers u^{2^i} plus distinct cross
        // terms u^{2^i + 2^j}.
        let a2 = a_series(2, 6, 16);
        let expect: &[(usize, u64)] = &[
            (2, 1),
            (4, 1),
            (6, 1),
            (8, 1),
            (10, 1),
            (12, 1),
            (16, 1),
        ];
        for u in 0..=16usize {
            let want = expect
                .iter()
                .find(|&&(uu, _)| uu == u)
                .map_or(0, |&(_, c)| c);
            assert_eq!(a2.coefficient(2, u), want, "u={u}");
        }
        // t^3 u^4 comes from the repeated first factor only.
        assert_eq!(a2.coefficient(3, 4), 1);
    }

    #[test]
    fn e_series_matches_the_frozen_k3_table() {
        // At p = 2 the series for k = 3 starts
        //   1 + u^4 (1 + t) + u^8 (t + t^2) + u^12 (1 + t + t^2 + t^3).
        let expect: &[(usize, usize, u64)] = &[
            (0, 0, 1),
            (0, 4, 1),
            (1, 4, 1),
            (1, 8, 1),
            (2, 8, 1),
            (0, 12, 1),
            (1, 12, 1),
            (2, 12, 1),
            (3, 12, 1),
        ];
        for method in [SeriesMethod::Closed, SeriesMethod::Recursive] {
            let e = e_series(3, 2, 8, 15, method);
            for t in 0..=8usize {
                for u in 0..=15usize {
                    let want = expect
                        .iter()
                        .find(|&&(tt, uu, _)| tt == t && uu == u)
                        .map_or(0, |&(_, _, c)| c);
                    assert_eq!(e.coefficient(t, u), want, "t={t}, u={u}, {method:?}");
                }
            }
        }
    }

    #[test]
    fn digit_p_minus_one_steps_substitute() {
        // When the last base-p digit is p-1 the whole series is the one for
        // floor(k/p) with u replaced by u^p.
        for (k, p) in [(7u64, 2u64), (5, 3), (9, 5)] {
            assert_eq!(k % p, p - 1);
            let e = e_series(k, p, 10, 30, SeriesMethod::Closed);
            let inner = e_series(k / p, p, 10, 30, SeriesMethod::Closed);
            assert_eq!(e, inner.substitute_u(p as usize, 30));
        }
    }

    #[test]
    fn closed_and_recursive_series_agree() {
        for p in [2u64, 3, 5] {
            for k in 0..=40u64 {
                let closed = e_series(k, p, 32, 64, SeriesMethod::Closed);
                let recursive = e_series(k, p, 32, 64, SeriesMethod::Recursive);
                assert_eq!(closed, recursive, "k={k}, p={p}");
            }
        }
    }

    #[test]
    fn two_row_ext_dimensions_frozen() {
        // (11,0) against (7,4) at p = 2: one dimension in degrees 0 and 1,
        // nothing else through degree 8.
        let l = part(&[11]);
        let m = part(&[7, 4]);
        for j in 0..=8usize {
            let want = u64::from(j <= 1);
            assert_eq!(ext_dim_formula(ExtCase::TwoRow, &l, &m, j, 2).unwrap(), want);
        }
        // (7,0) against (5,2) at p = 2: all groups vanish.
        let l = part(&[7]);
        let m = part(&[5, 2]);
        for j in 0..=8usize {
            assert_eq!(ext_dim_formula(ExtCase::TwoRow, &l, &m, j, 2).unwrap(), 0);
        }
        // Equal shapes: one endomorphism, nothing higher in degree 0.
        let l = part(&[6, 3]);
        assert_eq!(ext_dim_formula(ExtCase::TwoRow, &l, &l, 0, 3).unwrap(), 1);
        // Dominance mismatch gives zero, size mismatch an error.
        assert_eq!(
            ext_dim_formula(ExtCase::TwoRow, &part(&[5, 4]), &part(&[6, 3]), 0, 2).unwrap(),
            0
        );
        assert!(ext_dim_formula(ExtCase::TwoRow, &part(&[3]), &part(&[2]), 0, 2).is_err());
    }

    #[test]
    fn two_column_case_matches_the_two_row_case() {
        // Conjugating the frozen two-row pair: columns (2^4, 1^3) against
        // a single column of 11 boxes.
        let l = part(&[2, 2, 2, 2, 1, 1, 1]);
        let m = part(&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        for j in 0..=8usize {
            let want = u64::from(j <= 1);
            assert_eq!(
                ext_dim_formula(ExtCase::TwoColumn, &l, &m, j, 2).unwrap(),
                want
            );
        }
        assert!(ext_dim_formula(ExtCase::TwoColumn, &part(&[3, 3]), &part(&[2, 2, 2]), 0, 2)
            .is_err());
    }

    #[test]
    fn hook_ext_dimensions_frozen() {
        // (5,1,1,1) against the full column of 8 boxes at p = 2: one
        // dimension in degrees 3 and 4 only.
        let l = part(&[5, 1, 1, 1]);
        let m = part(&[1; 8]);
        for j in 0..=8usize {
            let want = u64::from(j == 3 || j == 4);
            assert_eq!(
                ext_dim_formula(ExtCase::Hook, &l, &m, j, 2).unwrap(),
                want,
                "j={j}"
            );
        }
        // Equal hooks: identity in degree 0.
        let h = part(&[3, 1, 1]);
        assert_eq!(ext_dim_formula(ExtCase::Hook, &h, &h, 0, 2).unwrap(), 1);
        assert!(ext_dim_formula(ExtCase::Hook, &part(&[2, 2]), &part(&[4]), 0, 2).is_err());
    }

    #[test]
    fn stable_cohomology_polynomials_frozen() {
        // Second symmetric power at p = 2: t + t^2.
        assert_eq!(h_polynomial(2, 0, 2, 10).unwrap(), vec![0, 1, 1]);
        // Top exterior powers: a single class in degree d.
        for d in 1..=6usize {
            let mut want = vec![0u64; d + 1];
            want[d] = 1;
            assert_eq!(h_polynomial(1, d - 1, 2, 10).unwrap(), want, "d={d}");
            assert_eq!(h_polynomial(1, d - 1, 3, 10).unwrap(), want, "d={d}");
        }
        // The (2, 1^2) hook at p = 2: t^3 + t^4.
        assert_eq!(h_polynomial(2, 2, 2, 10).unwrap(), vec![0, 0, 0, 1, 1]);
    }

    #[test]
    fn nonvanishing_criterion_matches_the_series() {
        // Frozen criterion arithmetic.
        assert!(hook_nonvanishing(1, 3, 2).unwrap());
        assert!(!hook_nonvanishing(2, 5, 2).unwrap());
        assert!(hook_nonvanishing(5, 5, 2).is_ok());
        assert!(hook_nonvanishing(3, 2, 2).is_err());
        // The predicate tracks the actual polynomial on a full sweep.
        for p in [2u64, 3, 5] {
            for m in 0..=20u64 {
                for n in 0..=m {
                    let poly = h_polynomial(n + 1, (m - n) as usize, p, 40).unwrap();
                    let nonzero = poly.iter().any(|&c| c > 0);
                    assert_eq!(
                        hook_nonvanishing(n, m, p).unwrap(),
                        nonzero,
                        "n={n}, m={m}, p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn block_predicate_frozen_values() {
        assert!(!gl2_same_block(&part(&[7]), &part(&[5, 2]), 2).unwrap());
        assert!(gl2_same_block(&part(&[11]), &part(&[7, 4]), 2).unwrap());
        assert!(gl2_same_block(&part(&[6, 3]), &part(&[6, 3]), 5).unwrap());
        assert!(gl2_same_block(&part(&[3]), &part(&[2, 1]), 2).is_ok());
        assert!(gl2_same_block(&part(&[3]), &part(&[2]), 2).is_err());
    }

    #[test]
    fn block_predicate_matches_ext_nonvanishing() {
        // Same block exactly when some extension group is nonzero, over
        // every two-row pair of each size through 20.
        let mut cache: BTreeMap<(u64, u64), BiPoly> = BTreeMap::new();
        for p in [2u64, 3, 5] {
            for d in 0..=20u64 {
                let shapes: Vec<(u64, u64)> = (0..=d / 2).map(|b| (d - b, b)).collect();
                for &(big_a, big_b) in &shapes {
                    for &(a, b) in &shapes {
                        if big_a < a {
                            continue;
                        }
                        let e = cache
                            .entry((p, a - b))
                            .or_insert_with(|| e_series(a - b, p, 32, 20, SeriesMethod::Closed));
                        let du = (big_a - a) as usize;
                        let some_ext = (0..=32usize).any(|j| e.coefficient(j, du) > 0);
                        let same_block = gl2_same_block(
                            &part(&[big_a, big_b]),
                            &part(&[a, b]),
                            p,
                        )
                        .unwrap();
                        assert_eq!(
                            same_block, some_ext,
                            "p={p}, ({big_a},{big_b}) vs ({a},{b})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn formula_matches_tower_homology() {
        // The series coefficients reproduce the dimensions computed from
        // the filtered towers, for every hook pair and every two-row pair
        // with full first shape, through degree 6.
        for p in [2u64, 3] {
            let ring = RingSelector::PrimeField(p);
            for d in 1..=6u64 {
                let hooks: Vec<Partition> = (1..=d)
                    .map(|arm| Partition::hook(arm, (d - arm) as usize).unwrap())
                    .collect();
                for l in &hooks {
                    for m in &hooks {
                        let table = ext_schur_query(l, m, ring).unwrap();
                        for j in 0..=(d as usize + 2) {
                            let formula = ext_dim_formula(ExtCase::Hook, l, m, j, p).unwrap();
                            assert_eq!(
                                formula,
                                table.dimension(j as i64) as u64,
                                "hooks {l} vs {m}, j={j}, p={p}"
                            );
                        }
                    }
                }
                let full = part(&[d]);
                let two_rows: Vec<Partition> =
                    (0..=d / 2).map(|b| part(&[d - b, b])).collect();
                for m in &two_rows {
                    let table = ext_schur_query(&full, m, ring).unwrap();
                    for j in 0..=(d as usize + 2) {
                        let formula = ext_dim_formula(ExtCase::TwoRow, &full, m, j, p).unwrap();
                        assert_eq!(
                            formula,
                            table.dimension(j as i64) as u64,
                            "rows {full} vs {m}, j={j}, p={p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn reindexed_series_lines_up_with_the_polynomials() {
        // The u-power of the reindexed series is the full hook size, and
        // its t-slices are the stable cohomology polynomials shifted down
        // by the leg count.
        for (b, p) in [(0usize, 2u64), (1, 2), (2, 3)] {
            let n = n_series(b as u64, p, 16, 24);
            for a in 1..=8u64 {
                let h = h_polynomial(a, b, p, 16).unwrap();
                for (t, u, c) in n.terms() {
                    if u == (a + b as u64) as usize {
                        assert_eq!(h.get(t + b).copied().unwrap_or(0), c, "a={a}, b={b}, t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn printed_forms() {
        let mut poly = BiPoly::zero(4, 8);
        poly.add_to(0, 0, 1);
        poly.add_to(1, 2, 3);
        assert_eq!(poly.to_string(), "1 * t^0 * u^0 + 3 * t^1 * u^2");
        let j = poly.to_json();
        assert_eq!(j["tmax"], 4);
        assert_eq!(j["umax"], 8);
        assert_eq!(j["coeffs"], json!([[0, 0, 1], [1, 2, 3]]));
        assert_eq!(BiPoly::zero(2, 2).to_string(), "0");
    }

    proptest! {
        /// Truncation consistency: a window never changes the coefficients
        /// it shares with a larger window.
        #[test]
        fn truncation_is_consistent_across_windows(
            k in 0u64..=12,
            p in prop::sample::select(vec![2u64, 3, 5]),
            t1 in 0usize..=10,
            u1 in 0usize..=24,
            method in prop::sample::select(vec![SeriesMethod::Closed, SeriesMethod::Recursive]),
        ) {
            let small = e_series(k, p, t1, u1, method);
            let big = e_series(k, p, t1 + 6, u1 + 10, method);
            prop_assert!(small.agrees_with(&big));
        }

        /// Window-intersected multiplication is commutative and drops the
        /// same terms either way.
        #[test]
        fn product_is_commutative_on_windows(
            p in prop::sample::select(vec![2u64, 3]),
            k1 in 0u64..=6,
            k2 in 0u64..=6,
        ) {
            let x = e_series(k1, p, 8, 16, SeriesMethod::Closed);
            let y = e_series(k2, p, 8, 16, SeriesMethod::Closed);
            prop_assert_eq!(x.times(&y), y.times(&x));
        }
    }
}
