//! Functor expressions: tensor products of divided powers, exterior powers,
//! symmetric powers, Weyl functors, and formal Schur markers.

use std::fmt;
use std::str::FromStr;

use crate::combinat::Partition;
use crate::error::{Error, Result};

/// One tensor factor.  Schur factors are formal bookkeeping for query
/// rewriting; they have no computable weight spaces of their own.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Divided(u64),
    Exterior(u64),
    Symmetric(u64),
    Weyl(Partition),
    Schur(Partition),
}

impl Atom {
    /// Homogeneity degree of the factor.
    pub fn degree(&self) -> u64 {
        match self {
            Atom::Divided(d) | Atom::Exterior(d) | Atom::Symmetric(d) => *d,
            Atom::Weyl(l) | Atom::Schur(l) => l.size(),
        }
    }

    pub fn is_formal(&self) -> bool {
        matches!(self, Atom::Schur(_))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Divided(d) => write!(f, "D{d}"),
            Atom::Exterior(d) => write!(f, "L{d}"),
            Atom::Symmetric(d) => write!(f, "S{d}"),
            Atom::Weyl(l) => write!(f, "W({l})"),
            Atom::Schur(l) => write!(f, "Schur({l})"),
        }
    }
}

/// A tensor product of atoms; the empty product is the unit functor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunctorExpr {
    factors: Vec<Atom>,
}

impl FunctorExpr {
    pub fn new(factors: Vec<Atom>) -> Self {
        FunctorExpr { factors }
    }

    pub fn atom(a: Atom) -> Self {
        FunctorExpr { factors: vec![a] }
    }

    pub fn divided(d: u64) -> Self {
        Self::atom(Atom::Divided(d))
    }

    pub fn exterior(d: u64) -> Self {
        Self::atom(Atom::Exterior(d))
    }

    pub fn symmetric(d: u64) -> Self {
        Self::atom(Atom::Symmetric(d))
    }

    pub fn weyl(l: Partition) -> Self {
        Self::atom(Atom::Weyl(l))
    }

    pub fn schur(l: Partition) -> Self {
        Self::atom(Atom::Schur(l))
    }

    pub fn factors(&self) -> &[Atom] {
        &self.factors
    }

    pub fn total_degree(&self) -> u64 {
        self.factors.iter().map(Atom::degree).sum()
    }

    pub fn tensor(&self, other: &FunctorExpr) -> FunctorExpr {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        FunctorExpr { factors }
    }

    pub fn has_formal(&self) -> bool {
        self.factors.iter().any(Atom::is_formal)
    }

    /// Kuhn duality: divided and symmetric powers swap, exterior powers are
    /// self-dual, and Weyl functors trade places with Schur functors of the
    /// same shape.
    pub fn kuhn_dual(&self) -> FunctorExpr {
        let factors = self
            .factors
            .iter()
            .map(|a| match a {
                Atom::Divided(d) => Atom::Symmetric(*d),
                Atom::Symmetric(d) => Atom::Divided(*d),
                Atom::Exterior(d) => Atom::Exterior(*d),
                Atom::Weyl(l) => Atom::Schur(l.clone()),
                Atom::Schur(l) => Atom::Weyl(l.clone()),
            })
            .collect();
        FunctorExpr { factors }
    }
}

impl fmt::Display for FunctorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

fn parse_atom(token: &str) -> Result<Atom> {
    let token = token.trim();
    if let Some(rest) = token.strip_prefix("Schur(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unterminated Schur atom '{token}'")))?;
        return Ok(Atom::Schur(inner.parse()?));
    }
    if let Some(rest) = token.strip_prefix("W(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unterminated Weyl atom '{token}'")))?;
        return Ok(Atom::Weyl(inner.parse()?));
    }
    if !token.is_char_boundary(1) || token.len() < 2 {
        return Err(Error::Parse(format!("unknown atom '{token}'")));
    }
    let (kind, num) = token.split_at(1);
    let d: u64 = num
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad degree in atom '{token}'")))?;
    match kind {
        "D" => Ok(Atom::Divided(d)),
        "L" => Ok(Atom::Exterior(d)),
        "S" => Ok(Atom::Symmetric(d)),
        _ => Err(Error::Parse(format!("unknown atom '{token}'"))),
    }
}

impl FromStr for FunctorExpr {
    type Err = Error;

    /// Grammar: atoms joined by '*'.  Atoms are D<d>, L<d> (exterior),
    /// S<d> (symmetric), W(<partition>), Schur(<partition>); "1" is the unit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(FunctorExpr::new(vec![]));
        }
        let factors: Result<Vec<Atom>> = s.split('*').map(parse_atom).collect();
        Ok(FunctorExpr::new(factors?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        for text in ["D3", "L2*D1", "S4*W(2,1)", "Schur(3,1)", "W(2,2)*L1*S2", "1"] {
            let e: FunctorExpr = text.parse().unwrap();
            assert_eq!(e.to_string(), text);
            let again: FunctorExpr = e.to_string().parse().unwrap();
            assert_eq!(again, e);
        }
        assert!("Q3".parse::<FunctorExpr>().is_err());
        assert!("W(2,1".parse::<FunctorExpr>().is_err());
        assert!("D".parse::<FunctorExpr>().is_err());
    }

    #[test]
    fn degrees_and_duality() {
        let e: FunctorExpr = "D3*L2*W(2,1)".parse().unwrap();
        assert_eq!(e.total_degree(), 8);
        assert_eq!(e.kuhn_dual().to_string(), "S3*L2*Schur(2,1)");
        assert_eq!(e.kuhn_dual().kuhn_dual(), e);
        assert!(!e.has_formal());
        assert!(e.kuhn_dual().has_formal());
    }
}
