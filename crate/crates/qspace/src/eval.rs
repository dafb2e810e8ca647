//! Evaluator mapping parsed expressions to scalars, state vectors, or
//! operator polynomials.

use num_complex::Complex64;

use crate::algebra::fock_inner_product;
use crate::basis::BasisChange;
use crate::error::Error;
use crate::expr::{Expr, OpKind};
use crate::ladder::LadderOp;
use crate::state::{Mode, OccupationState, StateVector};

/// One primitive operator application step.
#[derive(Clone, Copy, Debug)]
pub enum Atom {
    Ladder(LadderOp),
    FieldCreate(Mode),
    FieldAnnihilate(Mode),
}

impl Atom {
    fn apply(self, psi: &StateVector, ctx: &EvalContext<'_>) -> Result<StateVector, Error> {
        match self {
            Atom::Ladder(op) => op.apply(psi),
            Atom::FieldCreate(x) => ctx.basis()?.field_create(x, psi),
            Atom::FieldAnnihilate(x) => ctx.basis()?.field_annihilate(x, psi),
        }
    }
}

/// A scalar times a product of atoms, written left to right; the
/// rightmost atom acts first.
#[derive(Clone, Debug)]
pub struct EvalWord {
    pub scalar: Complex64,
    pub atoms: Vec<Atom>,
}

/// A sum of words. Operator expressions evaluate to this form and are
/// only expanded against a state when one is finally supplied.
#[derive(Clone, Debug)]
pub struct OpPoly {
    pub words: Vec<EvalWord>,
}

impl OpPoly {
    fn single(atom: Atom) -> Self {
        OpPoly {
            words: vec![EvalWord {
                scalar: Complex64::ONE,
                atoms: vec![atom],
            }],
        }
    }

    fn scale(mut self, c: Complex64) -> Self {
        for w in &mut self.words {
            w.scalar *= c;
        }
        self
    }

    /// Product `self * other`; the factors of `other` act first.
    fn compose(&self, other: &OpPoly) -> Self {
        let mut words = Vec::with_capacity(self.words.len() * other.words.len());
        for a in &self.words {
            for b in &other.words {
                let mut atoms = a.atoms.clone();
                atoms.extend_from_slice(&b.atoms);
                words.push(EvalWord {
                    scalar: a.scalar * b.scalar,
                    atoms,
                });
            }
        }
        OpPoly { words }
    }

    fn add(mut self, other: OpPoly) -> Self {
        self.words.extend(other.words);
        self
    }

    pub fn apply(&self, psi: &StateVector, ctx: &EvalContext<'_>) -> Result<StateVector, Error> {
        let mut acc = StateVector::zero(psi.sector());
        for word in &self.words {
            let mut cur = psi.clone();
            for atom in word.atoms.iter().rev() {
                cur = atom.apply(&cur, ctx)?;
            }
            acc = acc.add(&cur.scale(word.scalar))?;
        }
        Ok(acc)
    }
}

#[derive(Clone, Debug)]
pub enum Value {
    Scalar(Complex64),
    Vector(StateVector),
    Operator(OpPoly),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Vector(_) => "state",
            Value::Operator(_) => "operator",
        }
    }

    fn scale(self, c: Complex64) -> Value {
        match self {
            Value::Scalar(s) => Value::Scalar(s * c),
            Value::Vector(v) => Value::Vector(v.scale(c)),
            Value::Operator(p) => Value::Operator(p.scale(c)),
        }
    }
}

#[derive(Default)]
pub struct EvalContext<'a> {
    pub basis: Option<&'a BasisChange>,
    /// Amplitudes at or below this magnitude are dropped from a final
    /// state result. Zero keeps everything.
    pub prune: f64,
}

impl<'a> EvalContext<'a> {
    fn basis(&self) -> Result<&'a BasisChange, Error> {
        self.basis.ok_or(Error::NoBasisLoaded)
    }
}

fn scalar_value(value: f64, imaginary: bool) -> Complex64 {
    if imaginary {
        Complex64::new(0.0, value)
    } else {
        Complex64::new(value, 0.0)
    }
}

fn op_atom(kind: OpKind, index: u32) -> Result<Atom, Error> {
    let k = Mode::new(index)?;
    Ok(match kind {
        OpKind::BoseCreate => Atom::Ladder(LadderOp::BosonCreate(k)),
        OpKind::BoseAnnihilate => Atom::Ladder(LadderOp::BosonAnnihilate(k)),
        OpKind::FermiCreate => Atom::Ladder(LadderOp::FermionCreate(k)),
        OpKind::FermiAnnihilate => Atom::Ladder(LadderOp::FermionAnnihilate(k)),
        OpKind::FieldCreate => Atom::FieldCreate(k),
        OpKind::FieldAnnihilate => Atom::FieldAnnihilate(k),
    })
}

fn combine(left: Value, right: Value, ctx: &EvalContext<'_>) -> Result<Value, Error> {
    match (left, right) {
        (Value::Scalar(s), any) => Ok(any.scale(s)),
        (any, Value::Scalar(s)) => Ok(any.scale(s)),
        (Value::Operator(p), Value::Vector(v)) => Ok(Value::Vector(p.apply(&v, ctx)?)),
        (Value::Operator(a), Value::Operator(b)) => Ok(Value::Operator(a.compose(&b))),
        (l @ Value::Vector(_), r) => Err(Error::Evaluation(format!(
            "cannot apply a {} to a {}",
            l.kind(),
            r.kind()
        ))),
    }
}

fn add_values(left: Value, right: Value, negate_right: bool) -> Result<Value, Error> {
    let right = if negate_right {
        right.scale(-Complex64::ONE)
    } else {
        right
    };
    match (left, right) {
        (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(a + b)),
        (Value::Vector(a), Value::Vector(b)) => Ok(Value::Vector(a.add(&b)?)),
        (Value::Operator(a), Value::Operator(b)) => Ok(Value::Operator(a.add(b))),
        (l, r) => Err(Error::Evaluation(format!(
            "cannot add a {} and a {}",
            l.kind(),
            r.kind()
        ))),
    }
}

fn bracket_values(left: Value, right: Value, anti: bool, what: &str) -> Result<Value, Error> {
    match (left, right) {
        (Value::Operator(a), Value::Operator(b)) => {
            let ab = a.compose(&b);
            let ba = b.compose(&a);
            let ba = if anti { ba } else { ba.scale(-Complex64::ONE) };
            Ok(Value::Operator(ab.add(ba)))
        }
        (l, r) => Err(Error::Evaluation(format!(
            "{what} arguments must be operators, got a {} and a {}",
            l.kind(),
            r.kind()
        ))),
    }
}

pub fn eval(expr: &Expr, ctx: &EvalContext<'_>) -> Result<Value, Error> {
    let v = eval_node(expr, ctx)?;
    if ctx.prune > 0.0 {
        if let Value::Vector(sv) = v {
            return Ok(Value::Vector(sv.prune(ctx.prune)));
        }
    }
    Ok(v)
}

fn eval_node(expr: &Expr, ctx: &EvalContext<'_>) -> Result<Value, Error> {
    match expr {
        Expr::Scalar { value, imaginary } => Ok(Value::Scalar(scalar_value(*value, *imaginary))),
        Expr::Ket { sector, occ } => {
            let f = OccupationState::new(occ)?;
            Ok(Value::Vector(StateVector::embed(f, *sector)))
        }
        Expr::Op { kind, index } => Ok(Value::Operator(OpPoly::single(op_atom(*kind, *index)?))),
        Expr::Apply(factors) => {
            let mut iter = factors.iter().rev();
            let mut acc = eval_node(iter.next().expect("nonempty application"), ctx)?;
            for factor in iter {
                let left = eval_node(factor, ctx)?;
                acc = combine(left, acc, ctx)?;
            }
            Ok(acc)
        }
        Expr::Neg(x) => Ok(eval_node(x, ctx)?.scale(-Complex64::ONE)),
        Expr::Sum(l, r) => add_values(eval_node(l, ctx)?, eval_node(r, ctx)?, false),
        Expr::Diff(l, r) => add_values(eval_node(l, ctx)?, eval_node(r, ctx)?, true),
        Expr::Inner(l, r) => {
            let (l, r) = (eval_node(l, ctx)?, eval_node(r, ctx)?);
            match (l, r) {
                (Value::Vector(a), Value::Vector(b)) => {
                    Ok(Value::Scalar(fock_inner_product(&a, &b)?))
                }
                (l, r) => Err(Error::Evaluation(format!(
                    "inner product requires two states, got a {} and a {}",
                    l.kind(),
                    r.kind()
                ))),
            }
        }
        Expr::Commutator(a, b) => bracket_values(
            eval_node(a, ctx)?,
            eval_node(b, ctx)?,
            false,
            "commutator",
        ),
        Expr::Anticommutator(a, b) => bracket_values(
            eval_node(a, ctx)?,
            eval_node(b, ctx)?,
            true,
            "anticommutator",
        ),
    }
}
