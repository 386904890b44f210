use std::fmt;

use super::perm::Permutation;

/// An element of one of the concrete group representations.
///
/// The payload alone does not determine the group operation: a
/// `DirectPair` multiplies coordinate-wise by field addition or field
/// multiplication depending on the group it belongs to. Field entries are
/// element codes (see [`crate::ffield`]).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GroupElement {
    Permutation(Permutation),
    /// Canonical projective 2x2 matrix `[a, b, c, d]`: the first nonzero
    /// entry is 1.
    ProjMat([u32; 4]),
    DirectPair(Vec<u32>),
    SemidirectPair(Box<GroupElement>, Box<GroupElement>),
}

impl GroupElement {
    pub fn pair(kernel: GroupElement, complement: GroupElement) -> Self {
        GroupElement::SemidirectPair(Box::new(kernel), Box::new(complement))
    }

    pub fn variant(&self) -> &'static str {
        match self {
            GroupElement::Permutation(_) => "permutation",
            GroupElement::ProjMat(_) => "projective matrix",
            GroupElement::DirectPair(_) => "direct pair",
            GroupElement::SemidirectPair(..) => "semidirect pair",
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Permutation(p) => write!(f, "{p}"),
            GroupElement::ProjMat([a, b, c, d]) => write!(f, "[{a} {b}; {c} {d}]"),
            GroupElement::DirectPair(xs) => {
                let xs: Vec<String> = xs.iter().map(u32::to_string).collect();
                write!(f, "({})", xs.join(","))
            }
            GroupElement::SemidirectPair(k, c) => write!(f, "<{k}|{c}>"),
        }
    }
}
