//! Relations of associativity shape, `(x ∘a y) ∘b z = x ∘c (y ∘d z)`, and a
//! generic checker running them against any trialgebra model.
//!
//! The three generating operations are identified across theories as
//! `⊣ = ≺` (left), `⊥ = ·` (middle), `⊢ = ≻` (right). A slot may also hold
//! the formal sum `*` of all three operations.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Left,
    Middle,
    Right,
}

impl Op {
    /// Operator order `⊣ < ⊥ < ⊢` used for coordinates.
    pub const ALL: [Op; 3] = [Op::Left, Op::Middle, Op::Right];

    pub fn index(self) -> usize {
        match self {
            Op::Left => 0,
            Op::Middle => 1,
            Op::Right => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    Op(Op),
    Star,
}

impl Slot {
    /// The operations this slot expands to, each with coefficient one.
    pub fn expand(self) -> &'static [Op] {
        match self {
            Slot::Op(Op::Left) => &[Op::Left],
            Slot::Op(Op::Middle) => &[Op::Middle],
            Slot::Op(Op::Right) => &[Op::Right],
            Slot::Star => &Op::ALL,
        }
    }
}

/// Which symbol set to print relations with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    Associative,
    Dendriform,
}

/// `(x a y) b z = x c (y d z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Relation {
    pub a: Slot,
    pub b: Slot,
    pub c: Slot,
    pub d: Slot,
}

const L: Slot = Slot::Op(Op::Left);
const M: Slot = Slot::Op(Op::Middle);
const R: Slot = Slot::Op(Op::Right);
const S: Slot = Slot::Star;

const fn rel(a: Slot, b: Slot, c: Slot, d: Slot) -> Relation {
    Relation { a, b, c, d }
}

/// The eleven relations of an associative trialgebra, in the standard order.
pub const TRIAS: [Relation; 11] = [
    rel(L, L, L, L),
    rel(L, L, L, R),
    rel(R, L, R, L),
    rel(L, R, R, R),
    rel(R, R, R, R),
    rel(L, L, L, M),
    rel(M, L, M, L),
    rel(L, M, M, R),
    rel(R, M, R, M),
    rel(M, R, R, R),
    rel(M, M, M, M),
];

/// The seven relations of a dendriform trialgebra (`≺ = Left`, `≻ = Right`, `· = Middle`).
pub const TRIDEND: [Relation; 7] = [
    rel(L, L, L, S),
    rel(R, L, R, L),
    rel(S, R, R, R),
    rel(R, M, R, M),
    rel(L, M, M, R),
    rel(M, L, M, L),
    rel(M, M, M, M),
];

/// The nine relations of a cubical trialgebra: every `(x ∘₁ y) ∘₂ z = x ∘₁ (y ∘₂ z)`.
pub const TRICUB: [Relation; 9] = {
    let ops = [L, M, R];
    let mut out = [rel(L, L, L, L); 9];
    let mut i = 0;
    while i < 9 {
        let o1 = ops[i / 3];
        let o2 = ops[i % 3];
        out[i] = rel(o1, o2, o1, o2);
        i += 1;
    }
    out
};

/// The five relations of an associative dialgebra (operations `⊣`, `⊢`).
pub const DIAS: [Relation; 5] = [
    rel(L, L, L, L),
    rel(L, L, L, R),
    rel(R, L, R, L),
    rel(L, R, R, R),
    rel(R, R, R, R),
];

/// The three relations of a dendriform dialgebra, with `*` read as `≺ + ≻`.
pub const DIDEND: [Relation; 3] = [rel(L, L, L, S), rel(R, L, R, L), rel(S, R, R, R)];

/// The four relations of a cubical dialgebra.
pub const DICUB: [Relation; 4] = [
    rel(L, L, L, L),
    rel(L, R, L, R),
    rel(R, L, R, L),
    rel(R, R, R, R),
];

impl Relation {
    pub fn render(&self, notation: Notation) -> String {
        let sym = |s: Slot| -> &'static str {
            match (notation, s) {
                (_, Slot::Star) => "*",
                (Notation::Associative, Slot::Op(Op::Left)) => "⊣",
                (Notation::Associative, Slot::Op(Op::Middle)) => "⊥",
                (Notation::Associative, Slot::Op(Op::Right)) => "⊢",
                (Notation::Dendriform, Slot::Op(Op::Left)) => "≺",
                (Notation::Dendriform, Slot::Op(Op::Middle)) => "·",
                (Notation::Dendriform, Slot::Op(Op::Right)) => "≻",
            }
        };
        format!(
            "(x {} y) {} z = x {} (y {} z)",
            sym(self.a),
            sym(self.b),
            sym(self.c),
            sym(self.d)
        )
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Notation::Associative))
    }
}

fn parse_slot(tok: &str) -> Option<Slot> {
    Some(match tok {
        "⊣" | "-|" | "≺" | "<" => L,
        "⊥" | "_|_" | "·" | "." => M,
        "⊢" | "|-" | "≻" | ">" => R,
        "*" => S,
        _ => return None,
    })
}

/// Parses `(x A y) B z = x C (y D z)`, whitespace-insensitive, with the
/// operators written as `⊣ ⊥ ⊢`, `≺ · ≻`, the ASCII forms `-| _|_ |-` or
/// `< . >`, or `*`.
impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedRelation(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (lhs, rhs) = compact.split_once('=').ok_or_else(bad)?;
        let lhs = lhs.strip_prefix("(x").ok_or_else(bad)?;
        let (a, rest) = lhs.split_once("y)").ok_or_else(bad)?;
        let b = rest.strip_suffix('z').ok_or_else(bad)?;
        let rhs = rhs.strip_prefix('x').ok_or_else(bad)?;
        let (c, rest) = rhs.split_once("(y").ok_or_else(bad)?;
        let d = rest.strip_suffix("z)").ok_or_else(bad)?;
        let slot = |t: &str| parse_slot(t).ok_or_else(bad);
        Ok(Relation {
            a: slot(a)?,
            b: slot(b)?,
            c: slot(c)?,
            d: slot(d)?,
        })
    }
}

/// A trialgebra with basis `Basis`, given by its three products on basis
/// elements; everything else is the bilinear extension.
pub trait Trialgebra {
    type Basis: Ord + Clone + fmt::Debug;

    fn product(&self, op: Op, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;

    fn apply(
        &self,
        slot: Slot,
        a: &LinComb<Self::Basis>,
        b: &LinComb<Self::Basis>,
    ) -> LinComb<Self::Basis> {
        let mut out = LinComb::zero();
        for &op in slot.expand() {
            out += &LinComb::bilinear(a, b, |x, y| self.product(op, x, y));
        }
        out
    }

    fn star(&self, a: &LinComb<Self::Basis>, b: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        self.apply(Slot::Star, a, b)
    }
}

/// Both sides of `rel` on `(x, y, z)`.
pub fn evaluate_relation<T: Trialgebra>(
    model: &T,
    rel: &Relation,
    x: &LinComb<T::Basis>,
    y: &LinComb<T::Basis>,
    z: &LinComb<T::Basis>,
) -> (LinComb<T::Basis>, LinComb<T::Basis>) {
    let lhs = model.apply(rel.b, &model.apply(rel.a, x, y), z);
    let rhs = model.apply(rel.c, x, &model.apply(rel.d, y, z));
    (lhs, rhs)
}

pub fn relation_holds<T: Trialgebra>(
    model: &T,
    rel: &Relation,
    x: &T::Basis,
    y: &T::Basis,
    z: &T::Basis,
) -> bool {
    let (l, r) = evaluate_relation(
        model,
        rel,
        &LinComb::basis(x.clone()),
        &LinComb::basis(y.clone()),
        &LinComb::basis(z.clone()),
    );
    l == r
}

/// `(x * y) * z = x * (y * z)`.
pub const STAR_ASSOCIATIVITY: Relation = rel(S, S, S, S);

pub fn star_associative<T: Trialgebra>(
    model: &T,
    x: &T::Basis,
    y: &T::Basis,
    z: &T::Basis,
) -> bool {
    relation_holds(model, &STAR_ASSOCIATIVITY, x, y, z)
}

/// Outcome of running a list of relations over a set of triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub triples: usize,
    /// Violations per relation, in the order of the relation list.
    pub violations: Vec<usize>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.iter().all(|&v| v == 0)
    }

    pub fn total_violations(&self) -> usize {
        self.violations.iter().sum()
    }

    pub fn merge(&mut self, other: &SweepReport) {
        self.triples += other.triples;
        for (a, b) in self.violations.iter_mut().zip(&other.violations) {
            *a += b;
        }
    }
}

/// Checks every relation on every triple.
pub fn sweep<T, I>(model: &T, relations: &[Relation], triples: I) -> SweepReport
where
    T: Trialgebra,
    I: IntoIterator<Item = (T::Basis, T::Basis, T::Basis)>,
{
    let mut report = SweepReport {
        triples: 0,
        violations: vec![0; relations.len()],
    };
    for (x, y, z) in triples {
        report.triples += 1;
        for (k, r) in relations.iter().enumerate() {
            if !relation_holds(model, r, &x, &y, &z) {
                report.violations[k] += 1;
            }
        }
    }
    report
}

/// All triples `(x, y, z)` with `weight(x) + weight(y) + weight(z) <= max_weight`,
/// drawn from `basis(w)` (the basis elements of weight `w`, `w >= 1`).
pub fn triples_up_to<B: Clone, F>(max_weight: usize, mut basis: F) -> Vec<(B, B, B)>
where
    F: FnMut(usize) -> Vec<B>,
{
    let levels: Vec<Vec<B>> = (0..=max_weight)
        .map(|w| if w == 0 { Vec::new() } else { basis(w) })
        .collect();
    let mut out = Vec::new();
    for p in 1..=max_weight {
        for q in 1..=max_weight.saturating_sub(p) {
            for r in 1..=max_weight.saturating_sub(p + q) {
                for x in &levels[p] {
                    for y in &levels[q] {
                        for z in &levels[r] {
                            out.push((x.clone(), y.clone(), z.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}
