//! Shape-level generation of short resolutions of Weyl functors by sums of
//! tensor products of divided powers, their conjugates resolving Schur
//! functors by exterior-power products, and a symmetric-polynomial oracle
//! that certifies each shape by its Euler characteristic.
//!
//! Only the summands are produced, not the differentials: each homological
//! degree carries a multiset of partitions λ, naming the summand
//! D^{λ_1} ⊗ D^{λ_2} ⊗ ⋯ (divided flavor) or the corresponding product of
//! exterior powers.  The recipe removes the first row and resolves the
//! kernel through the horizontal-strip factors of D^{μ_1} ⊗ W_{μ̄}, so the
//! resolution of μ has length at most |μ| − μ_1.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde_json::json;

use crate::combinat::{
    bounded_compositions, check_degree_guard, compositions, kostka_number, pieri_strips, Partition,
};
use crate::error::Result;

/// Default cap on |μ| for shape generation; summand counts grow quickly
/// with the number of boxes below the first row.
pub const RESOLUTION_SIZE_GUARD: usize = 12;

/// Which exponential functors the summands are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Tensor products of divided powers, resolving a Weyl functor.
    Divided,
    /// Tensor products of exterior powers, resolving a Schur functor.
    Exterior,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Divided => write!(f, "divided"),
            Flavor::Exterior => write!(f, "exterior"),
        }
    }
}

/// The degreewise summand multisets of one resolution.  Degree 0 resolves
/// the target itself; each bag is sorted by parts, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionShape {
    pub target: Partition,
    pub flavor: Flavor,
    pub terms: Vec<Vec<Partition>>,
}

impl ResolutionShape {
    /// Highest homological degree carrying a summand.
    pub fn length(&self) -> usize {
        self.terms
            .iter()
            .rposition(|bag| !bag.is_empty())
            .unwrap_or(0)
    }

    /// Total number of summands across all degrees.
    pub fn summand_count(&self) -> usize {
        self.terms.iter().map(|bag| bag.len()).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut terms = serde_json::Map::new();
        for (deg, bag) in self.terms.iter().enumerate() {
            let entries: Vec<serde_json::Value> =
                bag.iter().map(|lam| json!(lam.to_string())).collect();
            terms.insert(deg.to_string(), json!(entries));
        }
        json!({
            "mu": self.target.to_string(),
            "flavor": self.flavor.to_string(),
            "terms": terms,
            "count": self.summand_count(),
            "length": self.length(),
        })
    }
}

fn sort_bag(bag: &mut [Partition]) {
    bag.sort_unstable_by(|x, y| y.parts().cmp(x.parts()));
}

fn push_term(terms: &mut Vec<Vec<Partition>>, degree: usize, lam: Partition) {
    if terms.len() <= degree {
        terms.resize(degree + 1, Vec::new());
    }
    terms[degree].push(lam);
}

/// The recursive recipe, memoized across the shared subshapes.  Recursion
/// is well founded on the number of boxes below the first row: the
/// first-row strip factors γ ≠ μ all have strictly longer first row.
fn resolve(mu: &Partition, memo: &mut HashMap<Partition, Vec<Vec<Partition>>>) -> Vec<Vec<Partition>> {
    if let Some(hit) = memo.get(mu) {
        return hit.clone();
    }
    let result = if mu.len() <= 1 {
        vec![vec![mu.clone()]]
    } else {
        let head = mu.part(0);
        let tail = Partition::new(mu.parts()[1..].to_vec()).expect("tail of a partition");
        let mut terms: Vec<Vec<Partition>> = Vec::new();
        for (deg, bag) in resolve(&tail, memo).into_iter().enumerate() {
            for lam in bag {
                let mut parts = lam.parts().to_vec();
                parts.push(head);
                parts.sort_unstable_by(|x, y| y.cmp(x));
                push_term(&mut terms, deg, Partition::new(parts).expect("sorted parts"));
            }
        }
        for gamma in pieri_strips(head, &tail) {
            if &gamma == mu {
                continue;
            }
            for (deg, bag) in resolve(&gamma, memo).into_iter().enumerate() {
                for lam in bag {
                    push_term(&mut terms, deg + 1, lam);
                }
            }
        }
        for bag in &mut terms {
            sort_bag(bag);
        }
        terms
    };
    memo.insert(mu.clone(), result.clone());
    result
}

/// Summand shapes of the divided-power resolution of the Weyl functor of
/// μ: degree 0 is D^{μ}, and the length is at most |μ| − μ_1.
pub fn weyl_resolution_shape(mu: &Partition) -> Result<ResolutionShape> {
    weyl_resolution_shape_with_guard(mu, RESOLUTION_SIZE_GUARD)
}

pub fn weyl_resolution_shape_with_guard(mu: &Partition, guard: usize) -> Result<ResolutionShape> {
    check_degree_guard(mu.size() as usize, guard)?;
    let mut memo = HashMap::new();
    Ok(ResolutionShape {
        target: mu.clone(),
        flavor: Flavor::Divided,
        terms: resolve(mu, &mut memo),
    })
}

/// Summand shapes of the exterior-power resolution of the Schur functor of
/// μ: the divided recipe run on the conjugate, so degree 0 is Λ^{μ'} and
/// the length is at most |μ| − ℓ(μ).
pub fn schur_resolution_shape(mu: &Partition) -> Result<ResolutionShape> {
    schur_resolution_shape_with_guard(mu, RESOLUTION_SIZE_GUARD)
}

pub fn schur_resolution_shape_with_guard(mu: &Partition, guard: usize) -> Result<ResolutionShape> {
    let inner = weyl_resolution_shape_with_guard(&mu.conjugate(), guard)?;
    Ok(ResolutionShape {
        target: mu.clone(),
        flavor: Flavor::Exterior,
        terms: inner.terms,
    })
}

/// A symmetric polynomial in a fixed number of variables, stored densely
/// as exponent vector → signed coefficient.  Oracle plumbing: with at
/// least |μ| variables, equality of truncations is equality of symmetric
/// functions in every degree that occurs here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    vars: usize,
    coeffs: BTreeMap<Vec<u64>, i64>,
}

impl SymPoly {
    pub fn zero(vars: usize) -> SymPoly {
        SymPoly {
            vars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> SymPoly {
        let mut out = SymPoly::zero(vars);
        out.add_term(vec![0; vars], 1);
        out
    }

    fn add_term(&mut self, expo: Vec<u64>, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(expo.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&expo);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn accumulate(&mut self, other: &SymPoly, scale: i64) {
        assert_eq!(self.vars, other.vars, "variable counts differ");
        for (expo, &c) in &other.coeffs {
            self.add_term(expo.clone(), c * scale);
        }
    }

    pub fn times(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.vars, other.vars, "variable counts differ");
        let mut out = SymPoly::zero(self.vars);
        for (e1, &c1) in &self.coeffs {
            for (e2, &c2) in &other.coeffs {
                let expo: Vec<u64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(expo, c1 * c2);
            }
        }
        out
    }

    /// Complete homogeneous h_k: every degree-k monomial once.
    pub fn complete_homogeneous(k: u64, vars: usize) -> SymPoly {
        let mut out = SymPoly::zero(vars);
        for expo in compositions(k, vars, 0) {
            out.add_term(expo, 1);
        }
        out
    }

    /// Elementary e_k: every squarefree degree-k monomial once.
    pub fn elementary(k: u64, vars: usize) -> SymPoly {
        let mut out = SymPoly::zero(vars);
        for expo in bounded_compositions(k, &vec![1; vars]) {
            out.add_term(expo, 1);
        }
        out
    }

    /// Schur polynomial by tableau expansion: the coefficient of each
    /// monomial is the count of semistandard fillings with that content.
    pub fn schur(mu: &Partition, vars: usize) -> SymPoly {
        let mut out = SymPoly::zero(vars);
        for content in compositions(mu.size(), vars, 0) {
            out.add_term(content.clone(), kostka_number(mu, &content) as i64);
        }
        out
    }
}

/// Euler-characteristic certificate: the alternating sum of the characters
/// of the summands must equal the character of the resolved functor — a
/// product of complete homogeneous polynomials per divided summand, of
/// elementary polynomials per exterior summand, against the Schur
/// polynomial of the target.
pub fn euler_check(shape: &ResolutionShape) -> bool {
    let vars = shape.target.size() as usize;
    let mut product_cache: HashMap<Partition, SymPoly> = HashMap::new();
    let mut acc = SymPoly::zero(vars);
    for (deg, bag) in shape.terms.iter().enumerate() {
        let sign = if deg % 2 == 0 { 1 } else { -1 };
        for lam in bag {
            let prod = product_cache.entry(lam.clone()).or_insert_with(|| {
                lam.parts().iter().fold(SymPoly::one(vars), |acc, &k| {
                    let factor = match shape.flavor {
                        Flavor::Divided => SymPoly::complete_homogeneous(k, vars),
                        Flavor::Exterior => SymPoly::elementary(k, vars),
                    };
                    acc.times(&factor)
                })
            });
            acc.accumulate(prod, sign);
        }
    }
    acc == SymPoly::schur(&shape.target, vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_of;
    use proptest::prelude::*;

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bags(shape: &ResolutionShape) -> Vec<Vec<Vec<u64>>> {
        shape
            .terms
            .iter()
            .map(|bag| bag.iter().map(|lam| lam.parts().to_vec()).collect())
            .collect()
    }

    #[test]
    fn single_row_shapes_are_immediate() {
        for d in 0..=5u64 {
            let mu = if d == 0 { Partition::empty() } else { part(&[d]) };
            let shape = weyl_resolution_shape(&mu).unwrap();
            assert_eq!(shape.length(), 0);
            assert_eq!(shape.summand_count(), 1);
            assert_eq!(shape.terms, vec![vec![mu.clone()]]);
        }
    }

    #[test]
    fn two_by_two_shape_frozen() {
        let shape = weyl_resolution_shape(&part(&[2, 2])).unwrap();
        assert_eq!(
            bags(&shape),
            vec![
                vec![vec![2, 2]],
                vec![vec![4], vec![3, 1]],
                vec![vec![4]],
            ]
        );
        assert_eq!(shape.length(), 2);
        assert_eq!(shape.summand_count(), 4);
    }

    #[test]
    fn six_box_staircase_shape_matches_the_frozen_table() {
        let shape = weyl_resolution_shape(&part(&[2, 2, 2])).unwrap();
        assert_eq!(
            bags(&shape),
            vec![
                vec![vec![2, 2, 2]],
                vec![vec![4, 2], vec![4, 2], vec![3, 2, 1], vec![3, 2, 1]],
                vec![
                    vec![6],
                    vec![5, 1],
                    vec![5, 1],
                    vec![4, 2],
                    vec![4, 2],
                    vec![4, 1, 1],
                    vec![3, 3],
                ],
                vec![
                    vec![6],
                    vec![6],
                    vec![6],
                    vec![5, 1],
                    vec![5, 1],
                    vec![4, 2],
                ],
                vec![vec![6], vec![6]],
            ]
        );
        assert_eq!(shape.length(), 4);
        assert_eq!(shape.summand_count(), 20);
    }

    #[test]
    fn conjugate_flavor_shapes() {
        // A single column resolves itself: the conjugate is one row.
        for d in 1..=5u64 {
            let shape = schur_resolution_shape(&part(&vec![1; d as usize])).unwrap();
            assert_eq!(shape.terms, vec![vec![part(&[d])]]);
            assert_eq!(shape.flavor, Flavor::Exterior);
        }
        // Degree 0 carries the conjugate shape.
        let shape = schur_resolution_shape(&part(&[3, 1])).unwrap();
        assert_eq!(shape.terms[0], vec![part(&[2, 1, 1])]);
        // The exterior shape of μ is the divided shape of the conjugate.
        let mu = part(&[2, 2, 2]);
        let ext = schur_resolution_shape(&mu).unwrap();
        let div = weyl_resolution_shape(&mu.conjugate()).unwrap();
        assert_eq!(ext.terms, div.terms);
        assert!(ext.length() <= (mu.size() as usize) - mu.len());
    }

    #[test]
    fn degree_one_terms_follow_the_strip_rule() {
        // Regression on the recipe wiring: degree 1 is the prepended
        // degree-1 bag of the tail plus the non-identity strip factors.
        for d in 2..=6u64 {
            for mu in partitions_of(d) {
                if mu.len() < 2 {
                    continue;
                }
                let head = mu.part(0);
                let tail = Partition::new(mu.parts()[1..].to_vec()).unwrap();
                let mut expect: Vec<Partition> = Vec::new();
                let tail_shape = weyl_resolution_shape(&tail).unwrap();
                if tail_shape.terms.len() > 1 {
                    for lam in &tail_shape.terms[1] {
                        let mut parts = lam.parts().to_vec();
                        parts.push(head);
                        parts.sort_unstable_by(|x, y| y.cmp(x));
                        expect.push(Partition::new(parts).unwrap());
                    }
                }
                for gamma in pieri_strips(head, &tail) {
                    if gamma != mu {
                        expect.push(gamma);
                    }
                }
                sort_bag(&mut expect);
                let shape = weyl_resolution_shape(&mu).unwrap();
                assert_eq!(shape.terms[1], expect, "mu = {mu}");
            }
        }
    }

    #[test]
    fn length_bounds_and_first_parts_hold() {
        for d in 1..=8u64 {
            for mu in partitions_of(d) {
                let div = weyl_resolution_shape(&mu).unwrap();
                assert!(
                    div.length() as u64 <= d - mu.part(0),
                    "divided length bound fails for {mu}"
                );
                for bag in &div.terms {
                    for lam in bag {
                        assert!(
                            lam.part(0) >= mu.part(0),
                            "summand {lam} has short first row for {mu}"
                        );
                    }
                }
                let ext = schur_resolution_shape(&mu).unwrap();
                assert!(
                    ext.length() <= d as usize - mu.len(),
                    "exterior length bound fails for {mu}"
                );
            }
        }
    }

    #[test]
    fn symmetric_polynomial_oracle_sanity() {
        // Two-term alternating expressions recover small Schur polynomials.
        for vars in [2usize, 3, 4] {
            let h = |k: u64| SymPoly::complete_homogeneous(k, vars);
            let e = |k: u64| SymPoly::elementary(k, vars);
            assert_eq!(SymPoly::schur(&part(&[2]), vars), h(2));
            assert_eq!(SymPoly::schur(&part(&[1, 1]), vars), e(2));
            let mut s21 = h(2).times(&h(1));
            s21.accumulate(&h(3), -1);
            assert_eq!(SymPoly::schur(&part(&[2, 1]), vars), s21);
            let mut s22 = h(2).times(&h(2));
            s22.accumulate(&h(3).times(&h(1)), -1);
            assert_eq!(SymPoly::schur(&part(&[2, 2]), vars), s22);
        }
        // Symmetry spot check: swapping the first two exponents fixes s_mu.
        let s = SymPoly::schur(&part(&[3, 1]), 4);
        for (expo, &c) in &s.coeffs {
            let mut swapped = expo.clone();
            swapped.swap(0, 1);
            assert_eq!(s.coeffs.get(&swapped), Some(&c));
        }
    }

    #[test]
    fn euler_characteristics_match() {
        for d in 1..=7u64 {
            for mu in partitions_of(d) {
                let div = weyl_resolution_shape(&mu).unwrap();
                assert!(euler_check(&div), "divided Euler check fails for {mu}");
            }
        }
        for d in 1..=6u64 {
            for mu in partitions_of(d) {
                let ext = schur_resolution_shape(&mu).unwrap();
                assert!(euler_check(&ext), "exterior Euler check fails for {mu}");
            }
        }
        // Negative control: removing one summand breaks the alternating
        // sum, so the certificate is not vacuous.
        let mut broken = weyl_resolution_shape(&part(&[2, 2])).unwrap();
        broken.terms[1].pop();
        assert!(!euler_check(&broken));
    }

    #[test]
    fn guard_rejects_oversized_targets() {
        let big = part(&[7, 6]);
        assert!(weyl_resolution_shape(&big).is_err());
        assert!(weyl_resolution_shape_with_guard(&big, 13).is_ok());
    }

    #[test]
    fn json_form_is_stable() {
        let shape = weyl_resolution_shape(&part(&[2, 2])).unwrap();
        let j = shape.to_json();
        assert_eq!(j["mu"], "2,2");
        assert_eq!(j["flavor"], "divided");
        assert_eq!(j["count"], 4);
        assert_eq!(j["length"], 2);
        assert_eq!(j["terms"]["0"], serde_json::json!(["2,2"]));
        assert_eq!(j["terms"]["1"], serde_json::json!(["4", "3,1"]));
        assert_eq!(j["terms"]["2"], serde_json::json!(["4"]));
    }

    fn arb_partition(max_size: u64) -> impl Strategy<Value = Partition> {
        (0..=max_size)
            .prop_flat_map(|d| {
                let all = partitions_of(d);
                let len = all.len();
                (Just(all), 0..len.max(1))
            })
            .prop_map(|(all, i)| all.get(i).cloned().unwrap_or_else(Partition::empty))
    }

    proptest! {
        /// The two flavors are conjugate relabelings of each other.
        #[test]
        fn flavors_are_conjugate(mu in arb_partition(7)) {
            let ext = schur_resolution_shape(&mu).unwrap();
            let div = weyl_resolution_shape(&mu.conjugate()).unwrap();
            prop_assert_eq!(ext.terms, div.terms);
        }

        /// Degree 0 resolves the target itself.
        #[test]
        fn degree_zero_is_the_target(mu in arb_partition(8)) {
            let div = weyl_resolution_shape(&mu).unwrap();
            prop_assert_eq!(&div.terms[0], &vec![mu.clone()]);
            let ext = schur_resolution_shape(&mu).unwrap();
            prop_assert_eq!(&ext.terms[0], &vec![mu.conjugate()]);
        }
    }
}
