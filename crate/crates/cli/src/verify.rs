//! The cross-checking suites behind `weylext verify`.
//!
//! Each suite replays one family of identities the library is built on,
//! over sweeps wide enough to be convincing but small enough for a desk
//! run: hook-sliding invariance of Ext tables, the degree-flip duality
//! between the two hook families, stable periodicity under growing the
//! first column, the anticommutation laws of the twisted differential
//! operators, the block criterion against series coefficients, and the
//! simplicial identities of the underlying tower.  Every case lands in a
//! [`CheckReport`]; the caller decides how to render the outcome.

use std::collections::HashMap;

use weylext::combinat::{partitions_of, Partition};
use weylext::exactlin::{
    homology, mapping_cone, ChainMap, IntegerMatrix, RingSelector,
};
use weylext::polyfun::FunctorExpr;
use weylext::series::{e_series, gl2_same_block, BiPoly, SeriesMethod};
use weylext::speccomplex::{
    build_complex, ext_schur_query_with_guard, stable_coh_dims_with_guard, CheckReport,
    ExtTable, FilteredFamily, COMPLEX_DEGREE_GUARD,
};
use weylext::twistedkoszul::{
    ambient_generize, ambient_specialize, boundary, contraction_eta, koszul_upsilon, phi,
    phi_chain_map, phib_chain_map, phib_graded_chain_map, theta_chain_map, AmbientElement,
};
use weylext::{Error, Result};

/// One verification family; `ALL` fixes the execution order.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Invariance,
    Duality,
    Periodicity,
    Twisted,
    Blocks,
    Simplicial,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Invariance,
        Suite::Duality,
        Suite::Periodicity,
        Suite::Twisted,
        Suite::Blocks,
        Suite::Simplicial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Invariance => "invariance",
            Suite::Duality => "duality",
            Suite::Periodicity => "periodicity",
            Suite::Twisted => "twisted",
            Suite::Blocks => "blocks",
            Suite::Simplicial => "simplicial",
        }
    }
}

/// Run one suite.  `progress` receives human-oriented status lines; the
/// returned reports carry every individual pass and failure.
pub fn run(
    suite: Suite,
    max_degree: usize,
    p: u64,
    progress: &mut dyn FnMut(&str),
) -> Result<Vec<CheckReport>> {
    match suite {
        Suite::Invariance => invariance_suite(max_degree, p, progress),
        Suite::Duality => duality_suite(max_degree, p, progress),
        Suite::Periodicity => periodicity_suite(max_degree, p, progress),
        Suite::Twisted => twisted_suite(max_degree, p, progress),
        Suite::Blocks => blocks_suite(max_degree, p, progress),
        Suite::Simplicial => simplicial_suite(max_degree, p, progress),
    }
}

/// Sliding a box from the arm to the leg of both hooks leaves the whole
/// Ext table unchanged, over the integers and over F_p alike.  For each
/// degree d and gap 0 <= delta < d the sweep walks every slide position
/// and compares the table against the leftmost one.
fn invariance_suite(
    max_degree: usize,
    p: u64,
    progress: &mut dyn FnMut(&str),
) -> Result<Vec<CheckReport>> {
    let guard = COMPLEX_DEGREE_GUARD.max(max_degree);
    let mut rep = CheckReport::new("hook pairs slide without changing Ext");
    for ring in [RingSelector::Integers, RingSelector::prime_field(p)?] {
        for d in 2..=max_degree as u64 {
            progress(&format!("invariance: degree {d} over {ring}"));
            for delta in 0..d {
                let mut reference: Option<ExtTable> = None;
                for arm in ((delta + 1)..=d).rev() {
                    let lambda = Partition::hook(arm, (d - arm) as usize)?;
                    let mu = Partition::hook(arm - delta, (d - arm + delta) as usize)?;
                    let table = ext_schur_query_with_guard(&lambda, &mu, ring, guard)?;
                    match &reference {
                        None => reference = Some(table),
                        Some(first) => rep.require(
                            format!(
                                "degree {d}, gap {delta}, arm {arm} matches the leftmost slide over {ring}"
                            ),
                            first.same_groups(&table),
                        ),
                    }
                }
            }
        }
    }
    Ok(vec![rep])
}

/// The two hook families determine each other through a degree flip: the
/// dimension of Ext^j out of the two-column shape (2^n,1^(m-n)) into the
/// full exterior power of its degree equals the dimension of Ext^(n-j)
/// out of the hook (n+1,1^(m-n)) into the exterior power one degree up.
fn duality_suite(
    max_degree: usize,
    p: u64,
    progress: &mut dyn FnMut(&str),
) -> Result<Vec<CheckReport>> {
    let ring = RingSelector::prime_field(p)?;
    let guard = COMPLEX_DEGREE_GUARD.max(2 * max_degree);
    let mut rep = CheckReport::new("two-column against hook duality");
    for total in 1..=max_degree as u64 {
        progress(&format!("duality: m+n = {total} over F_{p}"));
        for n in 0..=total / 2 {
            let m = total - n;
            let lambda = Partition::new(
                std::iter::repeat_n(2, n as usize)
                    .chain(std::iter::repeat_n(1, (m - n) as usize))
                    .collect(),
            )?;
            let col = Partition::new(vec![1; (m + n) as usize])?;
            let left = ext_schur_query_with_guard(&lambda, &col, ring, guard)?;
            let rho = Partition::hook(n + 1, (m - n) as usize)?;
            let col2 = Partition::new(vec![1; (m + 1) as usize])?;
            let right = ext_schur_query_with_guard(&rho, &col2, ring, guard)?;
            let mut flip_matches = true;
            for j in -1..=(total as i64 + 1) {
                if left.dimension(j) != right.dimension(n as i64 - j) {
                    flip_matches = false;
                }
            }
            rep.require(
                format!("m={m}, n={n}: tables agree after the j -> {n}-j flip"),
                flip_matches,
            );
        }
    }
    Ok(vec![rep])
}

/// Growing the first column of mu by a p-power q larger than the size of
/// mu minus its length shifts the whole stable cohomology table up by q.
fn periodicity_suite(
    max_degree: usize,
    p: u64,
    progress: &mut dyn FnMut(&str),
) -> Result<Vec<CheckReport>> {
    let guard = COMPLEX_DEGREE_GUARD.max(max_degree);
    let mut rep = CheckReport::new("stable cohomology is periodic in the first column");
    for size in 1..=3u64.min(max_degree as u64) {
        for mu in partitions_of(size) {
            let excess = mu.size() - mu.len() as u64;
            let mut q = 1u64;
            while q <= excess {
                q *= p;
            }
            let total = mu.size() + q;
            if total as usize > guard {
                continue;
            }
            progress(&format!("periodicity: mu = ({mu}), q = {q} at p = {p}"));
            let base = stable_coh_dims_with_guard(&mu, p, guard)?;
            let grown_parts: Vec<u64> = mu
                .parts()
                .iter()
                .copied()
                .chain(std::iter::repeat_n(1, q as usize))
                .collect();
            let grown_mu = Partition::new(grown_parts)?;
            let grown = stable_coh_dims_with_guard(&grown_mu, p, guard)?;
            let mut shifted_matches = true;
            for j in 0..=total as i64 {
                let expected = if j >= q as i64 {
                    base.get(&(j - q as i64)).copied().unwrap_or(0)
                } else {
                    0
                };
                if grown.get(&j).copied().unwrap_or(0) != expected {
                    shifted_matches = false;
                }
            }
            rep.require(format!("mu = ({mu}) shifts by q = {q} at p = {p}"), shifted_matches);
        }
    }
    Ok(vec![rep])
}

/// Every monomial in the divided-wedge algebra with the given parameters.
fn all_monomials(divided: u64, wedge: usize, coords: usize) -> Vec<AmbientElement> {
    fn compositions(total: u64, slots: usize) -> Vec<Vec<u64>> {
        if slots == 0 {
            return if total == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=total {
            for mut rest in compositions(total - first, slots - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    fn subsets(coords: usize, size: usize) -> Vec<Vec<usize>> {
        if size == 0 {
            return vec![vec![]];
        }
        if coords < size {
            return vec![];
        }
        let mut out = subsets(coords - 1, size);
        for mut s in subsets(coords - 1, size - 1) {
            s.push(coords);
            out.push(s);
        }
        out
    }
    let mut out = Vec::new();
    for alpha in compositions(divided, coords) {
        for beta in subsets(coords, wedge) {
            out.push(
                AmbientElement::monomial(alpha.clone(), beta.clone())
                    .expect("in-range monomial parameters"),
            );
        }
    }
    out
}

/// The two operator laws on monomials, the chain-map packagings, the
/// divided-power composition rule, the retraction identity, and the
/// acyclic mapping cones.
fn twisted_suite(
    max_degree: usize,
    p: u64,
    progress: &mut dyn FnMut(&str),
) -> Result<Vec<CheckReport>> {
    let cap = max_degree.min(5) as u64;
    let rings = [RingSelector::Integers, RingSelector::prime_field(p)?];
    let mut reports = Vec::new();

    let mut lemmas = CheckReport::new("twisted operator laws on monomials");
    progress("twisted: operator laws on monomials");
    for a in 1..=cap {
        for b in 0..=2usize {
            if a + b as u64 > cap {
                continue;
            }
            for n in 1..=3usize {
                let mut anti = true;
                let mut bound = true;
                for x in all_monomials(a, b, n) {
                    let lhs = phi(&koszul_upsilon(&x)?)?.plus(&koszul_upsilon(&phi(&x)?)?)?;
                    anti &= lhs.is_zero();
                    let triple = phi(&boundary(&x)?)?
                        .plus(&boundary(&phi(&x)?)?)?
                        .plus(&koszul_upsilon(&x)?)?;
                    bound &= triple.is_zero();
                }
                lemmas.require(
                    format!("anticommutation at divided {a}, wedge {b}, {n} slots"),
                    anti,
                );
                lemmas.require(
                    format!("boundary law at divided {a}, wedge {b}, {n} slots"),
                    bound,
                );
            }
        }
    }
    reports.push(lemmas);

    let mut chain = CheckReport::new("twisted chain maps");
    for ring in rings {
        progress(&format!("twisted: chain maps over {ring}"));
        for arm in 2..=cap {
            for legs in 0..=(cap - arm) as usize {
                for level in 2..=arm {
                    chain.record(
                        format!(
                            "projection is a chain map at arm {arm}, legs {legs}, level {level} over {ring}"
                        ),
                        phi_chain_map(arm, legs, level, ring).map(|_| ()),
                    );
                }
            }
        }
    }
    for d in 2..=cap {
        for bb in 0..=3usize.min(d as usize - 2) {
            let aa = d - bb as u64;
            for delta in 0..aa - 1 {
                let composed = ChainMap::compose(
                    &phi_chain_map(aa, bb, aa - delta, RingSelector::Integers)?,
                    &phib_chain_map(d, delta, bb, RingSelector::Integers)?,
                )?;
                let next =
                    phib_chain_map(d, delta, bb + 1, RingSelector::Integers)?.scale(bb as i64 + 1);
                chain.require(
                    format!("composition raises the order at degree {d}, drop {delta}, order {bb}"),
                    composed.eq_over_ring(&next),
                );
            }
        }
    }
    for d in 1..=cap {
        progress(&format!("twisted: retractions at degree {d}"));
        for bb in 0..d as usize {
            let aa = d - bb as u64;
            for delta in 0..aa {
                let forward = phib_graded_chain_map(d, delta, bb, RingSelector::Integers)?;
                let back = theta_chain_map(d, delta, bb, RingSelector::Integers)?;
                let round = ChainMap::compose(&back, &forward)?;
                let mut is_identity = true;
                for n in forward.source.lo()..=forward.source.hi() {
                    if round.block(n) != IntegerMatrix::identity(forward.source.rank(n)) {
                        is_identity = false;
                    }
                }
                chain.require(
                    format!(
                        "retraction inverts the graded map at degree {d}, drop {delta}, order {bb}"
                    ),
                    is_identity,
                );
            }
        }
    }
    reports.push(chain);

    let mut cones = CheckReport::new("mapping cones of the order maps are acyclic");
    for ring in rings {
        progress(&format!("twisted: mapping cones over {ring}"));
        for d in 1..=cap {
            for bb in 0..d as usize {
                let aa = d - bb as u64;
                for delta in 0..aa {
                    let outcome = phib_chain_map(d, delta, bb, ring).and_then(|map| {
                        let cone = mapping_cone(&map)?;
                        for n in cone.lo()..=cone.hi() {
                            if !homology(&cone, n).is_zero() {
                                return Err(Error::Internal(format!(
                                    "cone has homology in degree {n}"
                                )));
                            }
                        }
                        Ok(())
                    });
                    cones.record(
                        format!("degree {d}, drop {delta}, order {bb} over {ring}"),
                        outcome,
                    );
                }
            }
        }
    }
    reports.push(cones);
    Ok(reports)
}

/// The block predicate for a pair of weights with at most two rows agrees
/// with nonvanishing of the corresponding series coefficient column, across
/// every such pair of each degree.
fn blocks_suite(
    max_degree: usize,
    p: u64,
    progress: &mut dyn FnMut(&str),
) -> Result<Vec<CheckReport>> {
    let dmax = 20u64.max(max_degree as u64);
    let t_window = 32usize.max(dmax as usize + 2);
    let mut rep = CheckReport::new("block membership matches series coefficients");
    let mut cache: HashMap<u64, BiPoly> = HashMap::new();
    for d in 1..=dmax {
        if d % 5 == 0 {
            progress(&format!("blocks: degree {d} of {dmax} at p = {p}"));
        }
        for b in 0..=d / 2 {
            let a = d - b;
            let mu = if b == 0 {
                Partition::new(vec![a])?
            } else {
                Partition::new(vec![a, b])?
            };
            for big_b in 0..=d / 2 {
                let big_a = d - big_b;
                if big_a < a {
                    continue;
                }
                let lambda = if big_b == 0 {
                    Partition::new(vec![big_a])?
                } else {
                    Partition::new(vec![big_a, big_b])?
                };
                let k = a - b;
                let series = cache
                    .entry(k)
                    .or_insert_with(|| e_series(k, p, t_window, dmax as usize, SeriesMethod::Closed));
                let du = (big_a - a) as usize;
                let some_ext = (0..=t_window).any(|j| series.coefficient(j, du) > 0);
                let same_block = gl2_same_block(&lambda, &mu, p)?;
                rep.require(
                    format!("degree {d}: ({lambda}) vs ({mu}) at p = {p}"),
                    some_ext == same_block,
                );
            }
        }
    }
    if p == 2 {
        let lambda = Partition::new(vec![7])?;
        let mu = Partition::new(vec![5, 2])?;
        let series = e_series(3, 2, t_window, 8, SeriesMethod::Closed);
        let all_zero = (0..=t_window).all(|j| series.coefficient(j, 2) == 0);
        rep.require(
            "the (7) vs (5,2) pair at p = 2 is split with an all-zero column",
            all_zero && !gl2_same_block(&lambda, &mu, 2)?,
        );
    }
    Ok(vec![rep])
}

/// The simplicial identities of the merge and insert operators, their
/// compatibility with contraction, the square-zero law for the tower
/// differential, and strict validation of every complex the tower builds.
fn simplicial_suite(
    max_degree: usize,
    p: u64,
    progress: &mut dyn FnMut(&str),
) -> Result<Vec<CheckReport>> {
    let rings = [RingSelector::Integers, RingSelector::prime_field(p)?];
    let mut reports = Vec::new();

    let mut ops = CheckReport::new("merge and insert operator identities");
    progress("simplicial: operator identities on monomials");
    let acap = 3u64.min(max_degree as u64).max(1);
    for a in 1..=acap {
        for b in 0..=2usize {
            for n in 1..=3usize {
                let monos = all_monomials(a, b, n);
                let mut merge_merge = true;
                let mut square_zero = true;
                let mut insert_insert = true;
                let mut merge_insert = true;
                let mut eta_insert = true;
                let mut eta_merge = true;
                for x in &monos {
                    // Merges commute after reindexing: doing slot j first and
                    // then slot i < j equals doing i first and then j-1.
                    for i in 1..n {
                        for j in (i + 1)..n {
                            let lhs = ambient_specialize(i, &ambient_specialize(j, x)?)?;
                            let rhs = ambient_specialize(j - 1, &ambient_specialize(i, x)?)?;
                            merge_merge &= lhs == rhs;
                        }
                    }
                    if n >= 2 {
                        square_zero &= boundary(&boundary(x)?)?.is_zero();
                    }
                    // Inserts commute after reindexing: slot s then slot t+1
                    // equals slot t then slot s, for s <= t.
                    for s in 0..=n {
                        for t in s..=n {
                            let lhs = ambient_generize(s, &ambient_generize(t, x)?)?;
                            let rhs = ambient_generize(t + 1, &ambient_generize(s, x)?)?;
                            insert_insert &= lhs == rhs;
                        }
                    }
                    // Merging across an inserted slot either cancels the
                    // insertion or slides past it.
                    for s in 0..=n {
                        let inserted = ambient_generize(s, x)?;
                        for i in 1..=n {
                            let lhs = ambient_specialize(i, &inserted)?;
                            let rhs = if i < s {
                                ambient_generize(s - 1, &ambient_specialize(i, x)?)?
                            } else if i == s || i == s + 1 {
                                x.clone()
                            } else {
                                ambient_generize(s, &ambient_specialize(i - 1, x)?)?
                            };
                            merge_insert &= lhs == rhs;
                        }
                        // Contraction against insertion: below the fresh slot
                        // they commute, on it the contraction dies, above it
                        // the index shifts down.
                        for j in 1..=n + 1 {
                            let lhs = contraction_eta(j, &inserted)?;
                            let holds = if j <= s {
                                lhs == ambient_generize(s, &contraction_eta(j, x)?)?
                            } else if j == s + 1 {
                                lhs.is_zero()
                            } else {
                                lhs == ambient_generize(s, &contraction_eta(j - 1, x)?)?
                            };
                            eta_insert &= holds;
                        }
                    }
                    // Contraction against merge: below untouched, at the
                    // merge the two contractions add, above reindexes.
                    for i in 1..n {
                        let merged = ambient_specialize(i, x)?;
                        for j in 1..n {
                            let lhs = contraction_eta(j, &merged)?;
                            let rhs = if j < i {
                                ambient_specialize(i, &contraction_eta(j, x)?)?
                            } else if j == i {
                                ambient_specialize(i, &contraction_eta(j, x)?)?
                                    .plus(&ambient_specialize(i, &contraction_eta(j + 1, x)?)?)?
                            } else {
                                ambient_specialize(i, &contraction_eta(j + 1, x)?)?
                            };
                            eta_merge &= lhs == rhs;
                        }
                    }
                }
                ops.require(
                    format!("merges commute at divided {a}, wedge {b}, {n} slots"),
                    merge_merge,
                );
                if n >= 2 {
                    ops.require(
                        format!("boundary squares to zero at divided {a}, wedge {b}, {n} slots"),
                        square_zero,
                    );
                }
                ops.require(
                    format!("inserts commute at divided {a}, wedge {b}, {n} slots"),
                    insert_insert,
                );
                ops.require(
                    format!("merge-insert relations at divided {a}, wedge {b}, {n} slots"),
                    merge_insert,
                );
                ops.require(
                    format!("contraction-insert relations at divided {a}, wedge {b}, {n} slots"),
                    eta_insert,
                );
                ops.require(
                    format!("contraction-merge relations at divided {a}, wedge {b}, {n} slots"),
                    eta_merge,
                );
            }
        }
    }
    reports.push(ops);

    let mut towers = CheckReport::new("tower complexes validate strictly");
    let exprs = ["D3", "W(2,1)", "W(2,2)", "D2*L1"];
    for ring in rings {
        progress(&format!("simplicial: tower complexes over {ring}"));
        for text in exprs {
            let expr: FunctorExpr = text.parse()?;
            let d = expr.total_degree() as i64;
            for level in 1..=2u64 {
                let families = vec![
                    FilteredFamily::full(expr.clone(), level)?,
                    FilteredFamily::graded(expr.clone(), level)?,
                    FilteredFamily::extended(expr.clone(), level, (1, d + 2))?,
                    FilteredFamily::degenerate(expr.clone(), level, (1, d + 2))?,
                ];
                for family in families {
                    let variant = family.variant.to_string();
                    let built = build_complex(&family, ring)?;
                    towers.record(
                        format!("{text} at level {level}, variant {variant} over {ring}"),
                        built.complex.validate_strict(),
                    );
                }
            }
        }
    }
    reports.push(towers);
    Ok(reports)
}
