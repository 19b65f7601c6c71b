use std::fmt;

use super::{Field, Gf, Notation};
use crate::error::{Error, Result};

/// A field element bundled with its field, for checked mixed-field arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Gf,
}

impl FieldElement {
    pub fn new(field: Field, value: Gf) -> Self {
        FieldElement { field, value }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Gf {
        self.value
    }

    /// Coordinates over `F_p`.
    pub fn coeffs(&self) -> Vec<u64> {
        self.field.coeffs(self.value)
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    fn with(&self, value: Gf) -> FieldElement {
        FieldElement::new(self.field.clone(), value)
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, exp: i64) -> Result<FieldElement> {
        Ok(self.with(self.field.pow_signed(self.value, exp)?))
    }

    pub fn is_base_element(&self) -> bool {
        self.field.is_base_element(self.value)
    }

    pub fn absolute_trace(&self) -> u64 {
        self.field.absolute_trace(self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_element(self.value, Notation::Power))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (code {})", self.value.code())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_fields_are_rejected() {
        let f4 = Field::new(2, 1, 2, None).unwrap();
        let f8 = Field::new(2, 1, 3, None).unwrap();
        let a = f4.wrap(f4.primitive_element());
        let b = f8.wrap(f8.primitive_element());
        assert_eq!(a.add(&b).unwrap_err(), Error::SpecMismatch);
        assert_eq!(a.mul(&a).unwrap().to_string(), "a^2");
        assert_eq!(a.pow(-1).unwrap().to_string(), "a^2");
        assert_eq!(a.sub(&a).unwrap().inv().unwrap_err(), Error::DivisionByZero);
    }
}
