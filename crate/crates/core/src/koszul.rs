//! Quadratic relation spaces of binary non-symmetric operads and their
//! orthogonal complements.
//!
//! For generating operations `o_0, …, o_{m-1}` the weight-3 space has basis
//! `(o_i) o_j` (block 0) followed by `o_i (o_j)` (block 1), each block in the
//! order of the operation list, so coordinate `block·m² + m·i + j`. With the
//! three operations `⊣ < ⊥ < ⊢` this is the 18-dimensional space.
//!
//! The pairing is `+1` on block 0, `-1` on block 1, under the identification
//! `⊣ = ≺`, `⊥ = ·`, `⊢ = ≻`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::lincomb::Coeff;
use crate::relations::{Op, Relation, Slot, DIAS, DIDEND, TRIAS, TRICUB, TRIDEND};

/// The two operations surviving in dialgebras.
pub const DI_OPS: [Op; 2] = [Op::Left, Op::Right];

/// A vector of the weight-3 space over the operations `ops`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight3Vector {
    ops: Vec<Op>,
    coords: Vec<Coeff>,
}

impl Weight3Vector {
    pub fn zero(ops: &[Op]) -> Self {
        let m = ops.len();
        Self {
            ops: ops.to_vec(),
            coords: vec![Coeff::zero(); 2 * m * m],
        }
    }

    pub fn coords(&self) -> &[Coeff] {
        &self.coords
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn index(ops: &[Op], block: usize, first: Op, second: Op) -> Result<usize> {
        let pos = |op: Op| {
            ops.iter()
                .position(|&o| o == op)
                .ok_or_else(|| Error::MalformedRelation(format!("operation {op:?} not in {ops:?}")))
        };
        let m = ops.len();
        Ok(block * m * m + m * pos(first)? + pos(second)?)
    }

    /// `Σ_{first, second} e_{block, first, second}` with `*` expanding to
    /// every operation present.
    fn add_slots(&mut self, block: usize, a: Slot, b: Slot, sign: i64) -> Result<()> {
        let expand = |s: Slot| -> Vec<Op> {
            match s {
                Slot::Star => self.ops.clone(),
                Slot::Op(op) => vec![op],
            }
        };
        for first in expand(a) {
            for second in expand(b) {
                let k = Self::index(&self.ops, block, first, second)?;
                self.coords[k] += Coeff::from_integer(sign.into());
            }
        }
        Ok(())
    }
}

/// `(x a y) b z - x c (y d z)` as a vector: the left-parenthesized monomial
/// `(∘_a) ∘_b` enters block 0 with `+1`, the right one `∘_c (∘_d)` block 1
/// with `-1`.
pub fn relation_vector(rel: &Relation, ops: &[Op]) -> Result<Weight3Vector> {
    let mut v = Weight3Vector::zero(ops);
    v.add_slots(0, rel.a, rel.b, 1)?;
    v.add_slots(1, rel.c, rel.d, -1)?;
    Ok(v)
}

/// The signed pairing `Σ_block0 v_k w_k - Σ_block1 v_k w_k`.
pub fn pairing(v: &Weight3Vector, w: &Weight3Vector) -> Coeff {
    assert_eq!(v.ops, w.ops, "vectors over different operations");
    let half = v.coords.len() / 2;
    let mut s = Coeff::zero();
    for (k, (a, b)) in v.coords.iter().zip(&w.coords).enumerate() {
        if k < half {
            s += a * b;
        } else {
            s -= a * b;
        }
    }
    s
}

/// A subspace, stored by its reduced row echelon basis (canonical).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSpace {
    ops: Vec<Op>,
    basis: Vec<Vec<Coeff>>,
}

impl RelationSpace {
    pub fn span(ops: &[Op], vectors: &[Weight3Vector]) -> Self {
        let m = ops.len();
        let dim = 2 * m * m;
        let rows: Vec<Vec<Coeff>> = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.ops, ops, "vector over different operations");
                v.coords.clone()
            })
            .collect();
        let basis = if rows.is_empty() {
            Vec::new()
        } else {
            Matrix::from_rows(dim, rows).rref().0.rows().to_vec()
        };
        Self {
            ops: ops.to_vec(),
            basis,
        }
    }

    pub fn from_relations(relations: &[Relation], ops: &[Op]) -> Result<Self> {
        let vs = relations
            .iter()
            .map(|r| relation_vector(r, ops))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::span(ops, &vs))
    }

    pub fn full(ops: &[Op]) -> Self {
        let m = ops.len();
        let n = 2 * m * m;
        let basis = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Coeff::one() } else { Coeff::zero() })
                    .collect()
            })
            .collect();
        Self {
            ops: ops.to_vec(),
            basis,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.ops.len() * self.ops.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Coeff>] {
        &self.basis
    }

    /// `{w : ⟨v, w⟩ = 0 for all v}`.
    pub fn orthogonal_complement(&self) -> Self {
        let n = self.ambient_dim();
        let half = n / 2;
        // ⟨v, w⟩ = (Jv)·w, so R^⊥ is the kernel of the rows Jv.
        let rows: Vec<Vec<Coeff>> = self
            .basis
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .map(|(k, x)| if k < half { x.clone() } else { -x.clone() })
                    .collect()
            })
            .collect();
        let kernel = if rows.is_empty() {
            Self::full(&self.ops).basis
        } else {
            Matrix::from_rows(n, rows).nullspace()
        };
        let basis = if kernel.is_empty() {
            Vec::new()
        } else {
            Matrix::from_rows(n, kernel).rref().0.rows().to_vec()
        };
        Self {
            ops: self.ops.clone(),
            basis,
        }
    }
}

pub fn subspace_equal(a: &RelationSpace, b: &RelationSpace) -> bool {
    a == b
}

#[derive(Debug, Clone, Serialize)]
pub struct KoszulReport {
    pub dim_trias: usize,
    pub dim_tridend: usize,
    pub dim_tricub: usize,
    pub trias_dual_is_tridend: bool,
    pub tridend_dual_is_trias: bool,
    pub tricub_self_dual: bool,
    /// Number of trias/tridend relation pairs checked, and how many paired to zero.
    pub pairings_checked: usize,
    pub pairings_zero: usize,
    pub dim_dias: usize,
    pub dias_dual_is_didend: bool,
}

impl KoszulReport {
    pub fn passed(&self) -> bool {
        self.dim_trias == 11
            && self.dim_tridend == 7
            && self.dim_tricub == 9
            && self.trias_dual_is_tridend
            && self.tridend_dual_is_trias
            && self.tricub_self_dual
            && self.pairings_zero == self.pairings_checked
            && self.pairings_checked == 77
            && self.dim_dias == 5
            && self.dias_dual_is_didend
    }
}

pub fn duality_report() -> Result<KoszulReport> {
    let ops = Op::ALL;
    let trias = RelationSpace::from_relations(&TRIAS, &ops)?;
    let tridend = RelationSpace::from_relations(&TRIDEND, &ops)?;
    let tricub = RelationSpace::from_relations(&TRICUB, &ops)?;
    let mut checked = 0;
    let mut zero = 0;
    for r in &TRIAS {
        for s in &TRIDEND {
            checked += 1;
            if pairing(&relation_vector(r, &ops)?, &relation_vector(s, &ops)?).is_zero() {
                zero += 1;
            }
        }
    }
    let dias = RelationSpace::from_relations(&DIAS, &DI_OPS)?;
    let didend = RelationSpace::from_relations(&DIDEND, &DI_OPS)?;
    Ok(KoszulReport {
        dim_trias: trias.dim(),
        dim_tridend: tridend.dim(),
        dim_tricub: tricub.dim(),
        trias_dual_is_tridend: subspace_equal(&trias.orthogonal_complement(), &tridend),
        tridend_dual_is_trias: subspace_equal(&tridend.orthogonal_complement(), &trias),
        tricub_self_dual: subspace_equal(&tricub.orthogonal_complement(), &tricub),
        pairings_checked: checked,
        pairings_zero: zero,
        dim_dias: dias.dim(),
        dias_dual_is_didend: subspace_equal(&dias.orthogonal_complement(), &didend),
    })
}
