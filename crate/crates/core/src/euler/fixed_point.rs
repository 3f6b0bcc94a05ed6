use crate::character::VirtualCharacter;
use crate::error::Error;
use crate::partition::Partition;

/// Which diagram direction carries the weight `z₁`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Cell `(row i, column j)` has weight `z₁ʲ z₂ⁱ`: rows run along `z₁`.
    #[default]
    Row,
    /// The transpose of `Row`.
    Col,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Row => "row",
            Convention::Col => "col",
        }
    }

    pub fn from_name(s: &str) -> Option<Convention> {
        match s {
            "row" => Some(Convention::Row),
            "col" => Some(Convention::Col),
            _ => None,
        }
    }
}

/// Torus characters at the fixed point indexed by a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointData {
    pub partition: Partition,
    /// Fiber of the tautological bundle: one weight per cell.
    pub taut_char: VirtualCharacter,
    /// Cotangent space: two weights per cell, never trivial.
    pub cotangent_char: VirtualCharacter,
}

pub fn fixed_point_data(mu: &Partition, convention: Convention) -> Result<FixedPointData, Error> {
    let mut taut = VirtualCharacter::zero();
    let mut cot = VirtualCharacter::zero();
    for (i, j) in mu.cells() {
        let (a, l) = mu.arm_leg(i, j)?;
        let (a, l) = (a as i32, l as i32);
        taut.add_weight(j as i32, i as i32, 1);
        cot.add_weight(a + 1, -l, 1);
        cot.add_weight(-a, l + 1, 1);
    }
    if convention == Convention::Col {
        taut = taut.swap_vars();
        cot = cot.swap_vars();
    }
    Ok(FixedPointData { partition: mu.clone(), taut_char: taut, cotangent_char: cot })
}
