use std::fmt;
use std::sync::Arc;

use super::{Fe, GaloisField};
use crate::error::{Error, Result};

/// A field element bundled with its field, for checked arithmetic.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<GaloisField>,
    value: Fe,
}

impl FieldElement {
    pub fn new(field: Arc<GaloisField>, value: Fe) -> Result<Self> {
        if value.0 as u64 >= field.order() {
            return Err(Error::InvalidParameter(format!(
                "encoding {} out of range for a field of order {}",
                value.0,
                field.order()
            )));
        }
        Ok(FieldElement { field, value })
    }

    pub fn value(&self) -> Fe {
        self.value
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn coords(&self) -> Vec<u64> {
        self.field.coords(self.value)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field.spec() == other.field.spec()
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in GF({}^{})", self.coords(), self.field.characteristic(), self.field.degree())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Unary: `b` is ignored.
    Neg,
    /// Unary: `b` is ignored.
    Inv,
    /// Unary power `a^e`: `b` is ignored.
    Pow(u64),
}

/// Checked field arithmetic on two elements of the same field.
pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    if a.field.spec() != b.field.spec() {
        return Err(Error::FieldMismatch);
    }
    let f = &a.field;
    let value = match op {
        ArithOp::Add => f.add(a.value, b.value),
        ArithOp::Sub => f.sub(a.value, b.value),
        ArithOp::Mul => f.mul(a.value, b.value),
        ArithOp::Div => f.checked_div(a.value, b.value)?,
        ArithOp::Neg => f.neg(a.value),
        ArithOp::Inv => f.checked_inv(a.value)?,
        ArithOp::Pow(e) => f.pow(a.value, e),
    };
    Ok(FieldElement { field: Arc::clone(f), value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checked_ops() {
        let f = Arc::new(GaloisField::new(3, 2).unwrap());
        let g = Arc::new(GaloisField::new(5, 1).unwrap());
        let a = FieldElement::new(f.clone(), Fe(4)).unwrap();
        let zero = FieldElement::new(f.clone(), Fe::ZERO).unwrap();
        let other = FieldElement::new(g, Fe(1)).unwrap();
        assert_eq!(arith(&a, &zero, ArithOp::Add).unwrap(), a);
        assert_eq!(arith(&a, &zero, ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!(arith(&zero, &zero, ArithOp::Inv), Err(Error::DivisionByZero));
        assert_eq!(arith(&a, &other, ArithOp::Mul), Err(Error::FieldMismatch));
        let inv = arith(&a, &a, ArithOp::Inv).unwrap();
        assert_eq!(arith(&a, &inv, ArithOp::Mul).unwrap().value(), Fe::ONE);
        assert_eq!(arith(&a, &a, ArithOp::Pow(8)).unwrap().value(), Fe::ONE);
        assert!(FieldElement::new(f, Fe(9)).is_err());
    }
}
