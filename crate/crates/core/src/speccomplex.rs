//! Complexes of weight spaces linked by alternating sums of coordinate
//! merges, the filtration by the first weight entry, and the homological
//! read-offs built on them: Ext tables from hook sources and stable
//! cohomology dimension tables.
//!
//! For a functor expression P of degree d, homological degree n carries the
//! direct sum of the weight spaces P_{d̄} over compositions d̄ of d with n
//! parts (which index set depends on the variant), and the differential out
//! of degree n is Σ_{i=1}^{n-1} (-1)^{i-1} ψ_i, where ψ_i merges the
//! coordinates i, i+1.  Everything is assembled integrally; a prime-field
//! run reduces the same matrices at homology time.

use std::collections::{BTreeMap, HashMap};

use crate::combinat::{bounded_compositions, check_degree_guard, compositions, Partition};
use crate::error::{Error, Result};
use crate::exactlin::{
    check_long_exact_sequence, homology, ChainComplex, ChainMap, HomologyGroup, IntegerMatrix,
    RingSelector,
};
use crate::polyfun::{merge_weight, specialization_matrix, weight_space, FunctorExpr};

/// Default cap on the functor degree for complex construction; the index
/// sets and weight spaces grow exponentially past desk scale.
pub const COMPLEX_DEGREE_GUARD: usize = 8;

/// Which sub/quotient of the tower of weight spaces to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// All entries positive, first entry ≥ level.
    Full,
    /// All entries positive, first entry = level (quotient of `Full` by the
    /// next filtration step).
    Graded,
    /// Entries ≥ 0, last entry positive, first entry ≥ level; infinite in
    /// homological degree, so it exists only on an explicit window.
    Extended,
    /// The weights of `Extended` having some zero entry; a direct summand of
    /// `Extended` complementary to `Full`.
    Degenerate,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::Full => write!(f, "F"),
            Variant::Graded => write!(f, "grF"),
            Variant::Extended => write!(f, "F^"),
            Variant::Degenerate => write!(f, "D"),
        }
    }
}

/// One member of the filtered tower: a functor expression, a filtration
/// level, a variant, and (for the infinite variants) a finite window.
#[derive(Clone, Debug)]
pub struct FilteredFamily {
    pub expr: FunctorExpr,
    pub level: u64,
    pub variant: Variant,
    pub window: Option<(i64, i64)>,
}

impl FilteredFamily {
    pub fn new(
        expr: FunctorExpr,
        level: u64,
        variant: Variant,
        window: Option<(i64, i64)>,
    ) -> Result<FilteredFamily> {
        if level < 1 {
            return Err(Error::IndexOutOfRange("filtration level must be at least 1".into()));
        }
        if expr.has_formal() {
            return Err(Error::FormalAtom(format!(
                "{expr} contains a formal Schur atom; rewrite the query first"
            )));
        }
        if let Some((lo, hi)) = window {
            if lo < 1 || hi < lo {
                return Err(Error::MalformedComplex(format!("bad window {lo}..{hi}")));
            }
        }
        Ok(FilteredFamily { expr, level, variant, window })
    }

    pub fn full(expr: FunctorExpr, level: u64) -> Result<FilteredFamily> {
        FilteredFamily::new(expr, level, Variant::Full, None)
    }

    pub fn graded(expr: FunctorExpr, level: u64) -> Result<FilteredFamily> {
        FilteredFamily::new(expr, level, Variant::Graded, None)
    }

    pub fn extended(expr: FunctorExpr, level: u64, window: (i64, i64)) -> Result<FilteredFamily> {
        FilteredFamily::new(expr, level, Variant::Extended, Some(window))
    }

    pub fn degenerate(expr: FunctorExpr, level: u64, window: (i64, i64)) -> Result<FilteredFamily> {
        FilteredFamily::new(expr, level, Variant::Degenerate, Some(window))
    }

    pub fn degree(&self) -> u64 {
        self.expr.total_degree()
    }

    /// The compositions indexing homological degree n, lexicographically
    /// decreasing.
    pub fn weights_at(&self, n: i64) -> Vec<Vec<u64>> {
        if n < 1 {
            return Vec::new();
        }
        let n = n as usize;
        let d = self.degree();
        let a = self.level;
        match self.variant {
            Variant::Full => compositions(d, n, 1)
                .into_iter()
                .filter(|w| w[0] >= a)
                .collect(),
            Variant::Graded => {
                if d < a {
                    Vec::new()
                } else if n == 1 {
                    if d == a {
                        vec![vec![a]]
                    } else {
                        Vec::new()
                    }
                } else {
                    compositions(d - a, n - 1, 1)
                        .into_iter()
                        .map(|rest| {
                            let mut w = Vec::with_capacity(n);
                            w.push(a);
                            w.extend(rest);
                            w
                        })
                        .collect()
                }
            }
            Variant::Extended => bounded_compositions(d, &vec![d; n])
                .into_iter()
                .filter(|w| w[0] >= a && w[n - 1] >= 1)
                .collect(),
            Variant::Degenerate => bounded_compositions(d, &vec![d; n])
                .into_iter()
                .filter(|w| w[0] >= a && w[n - 1] >= 1 && w.contains(&0))
                .collect(),
        }
    }

    /// The homological degree range actually built: intrinsic for the finite
    /// variants, the supplied window otherwise.
    pub fn effective_window(&self) -> Result<(i64, i64)> {
        match self.variant {
            Variant::Full | Variant::Graded => {
                let d = self.degree();
                let hi = if d < self.level { 0 } else { (d - self.level + 1) as i64 };
                Ok((1, hi))
            }
            Variant::Extended | Variant::Degenerate => self.window.ok_or_else(|| {
                Error::MalformedComplex(
                    "extended/degenerate complexes are infinite; supply a finite window".into(),
                )
            }),
        }
    }
}

/// A built complex together with the weight layout of each term:
/// per homological degree, the list of (weight, column offset, rank).
#[derive(Clone, Debug)]
pub struct BuiltComplex {
    pub family: FilteredFamily,
    pub complex: ChainComplex,
    pub layout: BTreeMap<i64, Vec<(Vec<u64>, usize, usize)>>,
}

impl BuiltComplex {
    pub fn homology(&self, n: i64) -> HomologyGroup {
        homology(&self.complex, n)
    }

    /// Homology at every built degree, highest first omitted — plain map.
    pub fn homology_table(&self) -> BTreeMap<i64, HomologyGroup> {
        (self.complex.lo()..=self.complex.hi())
            .map(|n| (n, self.homology(n)))
            .collect()
    }

    /// Basis positions at degree n of the weights selected by `pred`.
    fn positions_where(&self, n: i64, pred: impl Fn(&[u64]) -> bool) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(layer) = self.layout.get(&n) {
            for (w, offset, rank) in layer {
                if pred(w) {
                    out.extend(*offset..offset + rank);
                }
            }
        }
        out
    }
}

pub fn build_complex(fam: &FilteredFamily, ring: RingSelector) -> Result<BuiltComplex> {
    build_complex_with_guard(fam, ring, COMPLEX_DEGREE_GUARD)
}

pub fn build_complex_with_guard(
    fam: &FilteredFamily,
    ring: RingSelector,
    guard: usize,
) -> Result<BuiltComplex> {
    check_degree_guard(fam.degree() as usize, guard)?;
    let (lo, hi) = fam.effective_window()?;
    if hi < lo {
        return Ok(BuiltComplex {
            family: fam.clone(),
            complex: ChainComplex::single(ring, 1, 0),
            layout: BTreeMap::new(),
        });
    }

    let mut layout: BTreeMap<i64, Vec<(Vec<u64>, usize, usize)>> = BTreeMap::new();
    let mut ranks = Vec::new();
    let mut labels = Vec::new();
    for n in lo..=hi {
        let mut layer = Vec::new();
        let mut labs = Vec::new();
        let mut offset = 0usize;
        for w in fam.weights_at(n) {
            let ws = weight_space(&fam.expr, &w)?;
            let r = ws.rank();
            for j in 0..r {
                let wtxt: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                labs.push(format!("({}) {}", wtxt.join(","), ws.label_string(j)));
            }
            layer.push((w, offset, r));
            offset += r;
        }
        layout.insert(n, layer);
        ranks.push(offset);
        labels.push(labs);
    }

    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let tgt_layer = &layout[&(n - 1)];
        let tgt_index: HashMap<&[u64], (usize, usize)> =
            tgt_layer.iter().map(|(w, o, r)| (w.as_slice(), (*o, *r))).collect();
        let tgt_total = ranks[(n - 1 - lo) as usize];
        let src_total = ranks[(n - lo) as usize];
        let mut big = IntegerMatrix::zero(tgt_total, src_total);
        for (w, src_offset, src_rank) in &layout[&n] {
            if *src_rank == 0 {
                continue;
            }
            let mut acc: BTreeMap<Vec<u64>, IntegerMatrix> = BTreeMap::new();
            for i in 1..w.len() {
                let m = specialization_matrix(&fam.expr, w, i)?;
                let signed = if (i - 1) % 2 == 1 { m.neg() } else { m };
                let key = merge_weight(w, i);
                match acc.remove(&key) {
                    Some(prev) => {
                        acc.insert(key, prev.add(&signed));
                    }
                    None => {
                        acc.insert(key, signed);
                    }
                }
            }
            for (tw, block) in acc {
                match tgt_index.get(tw.as_slice()) {
                    Some(&(to, tr)) => {
                        if tr != block.rows() {
                            return Err(Error::Internal(format!(
                                "rank mismatch pasting weight {tw:?} at degree {}",
                                n - 1
                            )));
                        }
                        big.paste(to, *src_offset, &block);
                    }
                    None => match fam.variant {
                        Variant::Graded if tw[0] > fam.level => {
                            // the first-entry-raising component is killed in
                            // the quotient by the next filtration step
                        }
                        Variant::Degenerate if tw.iter().all(|&x| x > 0) => {
                            if !block.is_zero() {
                                return Err(Error::Internal(format!(
                                    "degenerate part not closed: {w:?} reaches {tw:?}"
                                )));
                            }
                        }
                        _ => {
                            return Err(Error::Internal(format!(
                                "differential left the index set: {w:?} -> {tw:?} ({})",
                                fam.variant
                            )));
                        }
                    },
                }
            }
        }
        diffs.push(big);
    }

    let complex = ChainComplex::new(ring, lo, ranks, Some(labels), diffs)?;
    complex.validate_strict()?;
    Ok(BuiltComplex { family: fam.clone(), complex, layout })
}

/// An Ext computation result: association j → group, nonzero entries only,
/// in the canonical form (free rank + invariant factors, or a field
/// dimension).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub ring: RingSelector,
    pub source: String,
    pub target: String,
    pub rewrite_chain: Vec<String>,
    pub entries: BTreeMap<i64, HomologyGroup>,
}

impl ExtTable {
    pub fn group(&self, j: i64) -> HomologyGroup {
        self.entries.get(&j).cloned().unwrap_or_else(|| HomologyGroup::zero(self.ring))
    }

    /// Rank of the entry: field dimension, or free rank over the integers.
    pub fn dimension(&self, j: i64) -> usize {
        self.entries.get(&j).map_or(0, |g| g.rank())
    }

    /// Equality of the group tables themselves, ignoring the descriptions.
    pub fn same_groups(&self, other: &ExtTable) -> bool {
        self.ring == other.ring && self.entries == other.entries
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|(j, g)| (j.to_string(), serde_json::Value::String(g.to_string())))
            .collect();
        serde_json::json!({
            "ring": self.ring.to_string(),
            "source": self.source,
            "target": self.target,
            "rewrite": self.rewrite_chain,
            "entries": entries,
        })
    }
}

impl std::fmt::Display for ExtTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Ext({}, {}) over {}", self.source, self.target, self.ring)?;
        for line in &self.rewrite_chain {
            writeln!(f, "  {line}")?;
        }
        if self.entries.is_empty() {
            writeln!(f, "  all groups vanish")?;
        }
        for (j, g) in &self.entries {
            writeln!(f, "  j={j}: {g}")?;
        }
        Ok(())
    }
}

/// Ext groups out of the Weyl functor of a hook shape (arm a, legs b),
/// read off as Ext^i = H_{b+1-i} of the level-a full-support complex of the
/// target.
pub fn ext_from_hook(mu: &Partition, target: &FunctorExpr, ring: RingSelector) -> Result<ExtTable> {
    ext_from_hook_with_guard(mu, target, ring, COMPLEX_DEGREE_GUARD)
}

pub fn ext_from_hook_with_guard(
    mu: &Partition,
    target: &FunctorExpr,
    ring: RingSelector,
    guard: usize,
) -> Result<ExtTable> {
    let (arm, legs) = mu
        .is_hook()
        .ok_or_else(|| Error::ShapeMismatch(format!("{mu} is not a hook, no direct read-off")))?;
    let d = arm + legs as u64;
    if target.total_degree() != d {
        return Err(Error::ShapeMismatch(format!(
            "degree mismatch: |{mu}| = {d} but {target} has degree {}",
            target.total_degree()
        )));
    }
    let fam = FilteredFamily::full(target.clone(), arm)?;
    let built = build_complex_with_guard(&fam, ring, guard)?;
    let mut entries = BTreeMap::new();
    for n in built.complex.lo()..=built.complex.hi() {
        let g = built.homology(n);
        let i = legs as i64 + 1 - n;
        if i >= 0 && !g.is_zero() {
            entries.insert(i, g);
        }
    }
    Ok(ExtTable {
        ring,
        source: format!("W({mu})"),
        target: target.to_string(),
        rewrite_chain: Vec::new(),
        entries,
    })
}

/// Ext between two Schur functors, rewritten through duality until the
/// source is a hook Weyl functor; fails when no rewriting produces a hook.
pub fn ext_schur_query(
    lambda: &Partition,
    mu: &Partition,
    ring: RingSelector,
) -> Result<ExtTable> {
    ext_schur_query_with_guard(lambda, mu, ring, COMPLEX_DEGREE_GUARD)
}

pub fn ext_schur_query_with_guard(
    lambda: &Partition,
    mu: &Partition,
    ring: RingSelector,
    guard: usize,
) -> Result<ExtTable> {
    if lambda.size() != mu.size() {
        return Err(Error::ShapeMismatch(format!(
            "|{lambda}| = {} and |{mu}| = {} differ; the groups vanish trivially",
            lambda.size(),
            mu.size()
        )));
    }
    let mut chain = vec![format!("Ext(Schur({lambda}), Schur({mu}))")];
    let mut table = if mu.is_hook().is_some() {
        chain.push(format!("= Ext(W({mu}), W({lambda}))  [Kuhn-Ringel duality]"));
        ext_from_hook_with_guard(mu, &FunctorExpr::weyl(lambda.clone()), ring, guard)?
    } else if lambda.is_hook().is_some() {
        let lc = lambda.conjugate();
        let mc = mu.conjugate();
        chain.push(format!("= Ext(Schur({mc}), Schur({lc}))  [conjugate pair]"));
        chain.push(format!("= Ext(W({lc}), W({mc}))  [Kuhn-Ringel duality]"));
        ext_from_hook_with_guard(&lc, &FunctorExpr::weyl(mc), ring, guard)?
    } else {
        return Err(Error::NoHookRoute(format!(
            "neither {mu} nor the conjugate rewrite of {lambda} is a hook; \
             Ext(Schur({lambda}), Schur({mu})) has no specialization-complex route"
        )));
    };
    table.source = format!("Schur({lambda})");
    table.target = format!("Schur({mu})");
    table.rewrite_chain = chain;
    Ok(table)
}

/// Stable cohomology dimensions of the Schur functor of μ over F_p: the full
/// table j = 0..d, computed as prime-field homology of the level-1 complex
/// of the Weyl functor, with the vanishing window enforced as a post-check.
pub fn stable_coh_dims(mu: &Partition, p: u64) -> Result<BTreeMap<i64, usize>> {
    stable_coh_dims_with_guard(mu, p, COMPLEX_DEGREE_GUARD)
}

pub fn stable_coh_dims_with_guard(
    mu: &Partition,
    p: u64,
    guard: usize,
) -> Result<BTreeMap<i64, usize>> {
    let ring = RingSelector::prime_field(p)?;
    if mu.is_empty() {
        // the unit functor: one-dimensional in degree zero
        return Ok(BTreeMap::from([(0, 1)]));
    }
    let d = mu.size() as i64;
    let fam = FilteredFamily::full(FunctorExpr::weyl(mu.clone()), 1)?;
    let built = build_complex_with_guard(&fam, ring, guard)?;
    let mut table: BTreeMap<i64, usize> = (0..=d).map(|j| (j, 0)).collect();
    for n in built.complex.lo()..=built.complex.hi() {
        table.insert(n, built.homology(n).rank());
    }
    let ell = mu.len() as i64;
    for (&j, &dim) in &table {
        if dim > 0 && !(ell..=d).contains(&j) {
            return Err(Error::Internal(format!(
                "stable cohomology of Schur({mu}) escapes the window [{ell}, {d}] at degree {j}"
            )));
        }
    }
    Ok(table)
}

/// Outcome of a verification routine: named checks that passed or failed.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub label: String,
    pub passes: Vec<String>,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(label: impl Into<String>) -> CheckReport {
        CheckReport { label: label.into(), passes: Vec::new(), failures: Vec::new() }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, name: impl Into<String>, outcome: Result<()>) {
        let name = name.into();
        match outcome {
            Ok(()) => self.passes.push(name),
            Err(e) => self.failures.push(format!("{name}: {e}")),
        }
    }

    pub fn require(&mut self, name: impl Into<String>, holds: bool) {
        let name = name.into();
        if holds {
            self.passes.push(name);
        } else {
            self.failures.push(name);
        }
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}: {}", self.label, if self.ok() { "ok" } else { "FAILED" })?;
        for p in &self.passes {
            writeln!(f, "  pass: {p}")?;
        }
        for x in &self.failures {
            writeln!(f, "  FAIL: {x}")?;
        }
        Ok(())
    }
}

/// Verify the short exact sequence of complexes
/// 0 → (level+1 tower) → (level tower) → (graded piece) → 0
/// degreewise and the exactness of the induced homology long exact sequence
/// at every position, including the connecting maps.
pub fn verify_les(expr: &FunctorExpr, level: u64, ring: RingSelector) -> Result<CheckReport> {
    let sub = build_complex(&FilteredFamily::full(expr.clone(), level + 1)?, ring)?;
    let mid = build_complex(&FilteredFamily::full(expr.clone(), level)?, ring)?;
    let quo = build_complex(&FilteredFamily::graded(expr.clone(), level)?, ring)?;

    let mut inc_blocks = BTreeMap::new();
    for n in sub.complex.lo()..=sub.complex.hi() {
        let mut b = IntegerMatrix::zero(mid.complex.rank(n), sub.complex.rank(n));
        if let Some(layer) = sub.layout.get(&n) {
            let mid_layer = mid.layout.get(&n).cloned().unwrap_or_default();
            let mid_index: HashMap<&Vec<u64>, usize> =
                mid_layer.iter().map(|(w, o, _)| (w, *o)).collect();
            for (w, so, sr) in layer {
                let to = *mid_index.get(&w).ok_or_else(|| {
                    Error::Internal(format!("sub weight {w:?} missing from the ambient tower"))
                })?;
                for k in 0..*sr {
                    b.set(to + k, so + k, 1.into());
                }
            }
        }
        inc_blocks.insert(n, b);
    }
    let inc = ChainMap::new(sub.complex.clone(), mid.complex.clone(), 0, inc_blocks)?;

    let mut proj_blocks = BTreeMap::new();
    for n in quo.complex.lo()..=quo.complex.hi() {
        let mut b = IntegerMatrix::zero(quo.complex.rank(n), mid.complex.rank(n));
        if let Some(layer) = quo.layout.get(&n) {
            let mid_layer = mid.layout.get(&n).cloned().unwrap_or_default();
            let mid_index: HashMap<&Vec<u64>, usize> =
                mid_layer.iter().map(|(w, o, _)| (w, *o)).collect();
            for (w, qo, qr) in layer {
                let mo = *mid_index.get(&w).ok_or_else(|| {
                    Error::Internal(format!("graded weight {w:?} missing from the tower"))
                })?;
                for k in 0..*qr {
                    b.set(qo + k, mo + k, 1.into());
                }
            }
        }
        proj_blocks.insert(n, b);
    }
    let proj = ChainMap::new(mid.complex.clone(), quo.complex.clone(), 0, proj_blocks)?;

    let mut report = CheckReport::new(format!(
        "filtration step {level} of the weight tower of {expr} over {ring}"
    ));
    report.record(
        "short exact sequence of complexes and homology long exact sequence",
        check_long_exact_sequence(&inc, &proj),
    );
    Ok(report)
}

/// Verify that on the given window the extended complex splits termwise and
/// differentialwise into the full part plus the degenerate part, and that
/// the degenerate part is acyclic at interior window degrees.
pub fn degenerate_split_check(
    expr: &FunctorExpr,
    level: u64,
    window: (i64, i64),
    ring: RingSelector,
) -> Result<CheckReport> {
    let d = expr.total_degree() as i64;
    let (lo, hi) = window;
    let mut report = CheckReport::new(format!(
        "extended = full + degenerate split at level {level} for {expr} on {lo}..{hi} over {ring}"
    ));
    report.require(
        format!("window reaches past the finite support (upper end {hi} >= degree+2 = {})", d + 2),
        hi >= d + 2,
    );

    let ext = build_complex(&FilteredFamily::extended(expr.clone(), level, window)?, ring)?;
    let deg = match build_complex(&FilteredFamily::degenerate(expr.clone(), level, window)?, ring)
    {
        Ok(b) => b,
        Err(e) => {
            report.failures.push(format!("degenerate part is not a subcomplex: {e}"));
            return Ok(report);
        }
    };
    report.passes.push("degenerate differential closes up (merge components into \
                        fully-supported weights cancel in the alternating sum)"
        .into());
    let full = build_complex(&FilteredFamily::full(expr.clone(), level)?, ring)?;

    let mut ranks_match = true;
    for n in lo..=hi {
        if ext.complex.rank(n) != full.complex.rank(n) + deg.complex.rank(n) {
            ranks_match = false;
            report.failures.push(format!(
                "term rank mismatch at degree {n}: {} != {} + {}",
                ext.complex.rank(n),
                full.complex.rank(n),
                deg.complex.rank(n)
            ));
        }
    }
    if ranks_match {
        report.passes.push("term ranks add up degreewise".into());
    }

    let mut diffs_match = true;
    for n in lo + 1..=hi {
        let dhat = ext.complex.diff(n);
        let full_rows = ext.positions_where(n - 1, |w| w.iter().all(|&x| x > 0));
        let full_cols = ext.positions_where(n, |w| w.iter().all(|&x| x > 0));
        let deg_rows = ext.positions_where(n - 1, |w| w.contains(&0));
        let deg_cols = ext.positions_where(n, |w| w.contains(&0));
        if !dhat.select_rows(&full_rows).select_columns(&deg_cols).is_zero() {
            diffs_match = false;
            report
                .failures
                .push(format!("degenerate columns leak into full rows at degree {n}"));
        }
        if !dhat.select_rows(&deg_rows).select_columns(&full_cols).is_zero() {
            diffs_match = false;
            report.failures.push(format!("full columns leak into degenerate rows at degree {n}"));
        }
        if dhat.select_rows(&full_rows).select_columns(&full_cols) != full.complex.diff(n) {
            diffs_match = false;
            report.failures.push(format!("full diagonal block differs at degree {n}"));
        }
        if dhat.select_rows(&deg_rows).select_columns(&deg_cols) != deg.complex.diff(n) {
            diffs_match = false;
            report.failures.push(format!("degenerate diagonal block differs at degree {n}"));
        }
    }
    if diffs_match {
        report.passes.push("differential is block-diagonal for the split".into());
    }

    let mut acyclic = true;
    for n in lo + 1..hi {
        let g = homology(&deg.complex, n);
        if !g.is_zero() {
            acyclic = false;
            report
                .failures
                .push(format!("degenerate part has homology {g} at interior degree {n}"));
        }
    }
    if acyclic {
        report
            .passes
            .push(format!("degenerate part acyclic at interior degrees {}..{}", lo + 1, hi - 1));
    }
    report.passes.push(format!(
        "boundary degrees {lo} and {hi} are truncation artifacts, not verified"
    ));
    Ok(report)
}
