use crate::hypergeom::{Family, FamilySpec};

/// The sign data `ε, ε1, ε2, θ, χ` attached to a family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignProfile {
    /// 1 when the family depends on `μ`, else 0.
    pub eps: i8,
    /// Sign in front of `μ` (1 by convention when `eps = 0`).
    pub eps1: i8,
    /// Sign in front of `λ`.
    pub eps2: i8,
    /// `m` when `eps1 = 1`, else 0.
    pub theta: u32,
    /// 0 when `eps1 = eps2`, else 1.
    pub chi: u8,
}

impl SignProfile {
    pub fn from_signs(eps: i8, eps1: i8, eps2: i8, m: u32) -> Self {
        SignProfile {
            eps,
            eps1,
            eps2,
            theta: if eps1 == 1 { m } else { 0 },
            chi: u8::from(eps1 != eps2),
        }
    }

    pub fn for_family(family: Family, m: u32) -> Self {
        let (eps, eps1, eps2) = match family {
            Family::I => (0, 1, 1),
            Family::II => (0, 1, -1),
            Family::III => (1, 1, 1),
            Family::IV => (1, -1, -1),
            Family::V => (1, 1, -1),
            Family::VI => (1, -1, 1),
        };
        Self::from_signs(eps, eps1, eps2, m)
    }

    pub fn derive(spec: &FamilySpec) -> Self {
        Self::for_family(spec.family(), spec.m())
    }

    /// `ε1·ε2`.
    pub fn shift_sign(&self) -> i8 {
        self.eps1 * self.eps2
    }
}
