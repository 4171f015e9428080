//! The partition of F into seven classes by right divisors among
//! `X0, X0^-1, X1, X1^-1`, and finite checks of how right multiplication by a
//! standard generator moves elements between classes.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::diagrams::{atomic, concat_product, nf_to_diagram, CanonicalDiagram};
use crate::folner::ElementSet;
use crate::words::{Letter, NormalForm, Sign};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("divisor set {0} is not one of the seven admissible sets")]
    InadmissibleDivisors(DivisorSet),

    #[error("unknown class label `{0}` (expected M1..M7)")]
    UnknownLabel(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
    M7,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 7] = [
        ClassLabel::M1,
        ClassLabel::M2,
        ClassLabel::M3,
        ClassLabel::M4,
        ClassLabel::M5,
        ClassLabel::M6,
        ClassLabel::M7,
    ];

    /// Zero-based position in `M1..M7`.
    pub fn ordinal(self) -> usize {
        self as usize
    }

    pub fn divisors(self) -> DivisorSet {
        let none = DivisorSet::default();
        match self {
            ClassLabel::M1 => none,
            ClassLabel::M2 => DivisorSet { x0_inv: true, ..none },
            ClassLabel::M3 => DivisorSet { x0: true, ..none },
            ClassLabel::M4 => DivisorSet { x1_inv: true, ..none },
            ClassLabel::M5 => DivisorSet { x1: true, ..none },
            ClassLabel::M6 => DivisorSet { x0_inv: true, x1_inv: true, ..none },
            ClassLabel::M7 => DivisorSet { x0_inv: true, x1: true, ..none },
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}", self.ordinal() + 1)
    }
}

impl FromStr for ClassLabel {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassLabel::ALL
            .into_iter()
            .find(|c| c.to_string() == s.trim())
            .ok_or_else(|| ClassifyError::UnknownLabel(s.to_string()))
    }
}

/// Which of `X0, X0^-1, X1, X1^-1` right-divide a canonical diagram.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DivisorSet {
    pub x0: bool,
    pub x0_inv: bool,
    pub x1: bool,
    pub x1_inv: bool,
}

impl DivisorSet {
    pub fn label(self) -> Option<ClassLabel> {
        ClassLabel::ALL.into_iter().find(|c| c.divisors() == self)
    }
}

impl fmt::Display for DivisorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            (self.x0, "X0"),
            (self.x0_inv, "X0^-1"),
            (self.x1, "X1"),
            (self.x1_inv, "X1^-1"),
        ];
        let present: Vec<_> = names.iter().filter(|(p, _)| *p).map(|(_, n)| *n).collect();
        write!(f, "{{{}}}", present.join(","))
    }
}

/// `d` is right divisible by `X_index^sign` iff multiplying by the inverse
/// atomic diagram cancels a cell.
pub fn right_divisible(d: &CanonicalDiagram, index: u32, sign: Sign) -> bool {
    let product = concat_product(d, &atomic(index, sign.flip()));
    product.cells() + 1 == d.cells()
}

pub fn right_divisors(d: &CanonicalDiagram) -> Result<DivisorSet, ClassifyError> {
    let set = DivisorSet {
        x0: right_divisible(d, 0, Sign::Plus),
        x0_inv: right_divisible(d, 0, Sign::Minus),
        x1: right_divisible(d, 1, Sign::Plus),
        x1_inv: right_divisible(d, 1, Sign::Minus),
    };
    match set.label() {
        Some(_) => Ok(set),
        None => Err(ClassifyError::InadmissibleDivisors(set)),
    }
}

/// # Panics
///
/// If the divisor set of `g` is inadmissible, which would mean the diagram
/// arithmetic is broken.
pub fn class_of(g: &NormalForm) -> ClassLabel {
    let d = nf_to_diagram(g);
    match right_divisors(&d) {
        Ok(set) => set.label().expect("admissible divisor set has a label"),
        Err(e) => panic!("class_of({g}): {e}"),
    }
}

/// The four inclusions checked by [`check_closures`]:
///
/// - `A`: `(M1 ∪ M3 ∪ M4 ∪ M5) x0 ⊆ M3`
/// - `B`: `(M2 ∪ M7) x1 ⊆ M7`
/// - `C`: `M7 x0^-1 ⊆ M2`
/// - `D`: `M3 x1^-1 ⊆ M4`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosureRule {
    A,
    B,
    C,
    D,
}

impl ClosureRule {
    pub const ALL: [ClosureRule; 4] = [ClosureRule::A, ClosureRule::B, ClosureRule::C, ClosureRule::D];

    pub fn applies_to(self, class: ClassLabel) -> bool {
        use ClassLabel::*;
        match self {
            ClosureRule::A => matches!(class, M1 | M3 | M4 | M5),
            ClosureRule::B => matches!(class, M2 | M7),
            ClosureRule::C => class == M7,
            ClosureRule::D => class == M3,
        }
    }

    pub fn generator(self) -> Letter {
        match self {
            ClosureRule::A => Letter::pos(0),
            ClosureRule::B => Letter::pos(1),
            ClosureRule::C => Letter::neg(0),
            ClosureRule::D => Letter::neg(1),
        }
    }

    pub fn target(self) -> ClassLabel {
        match self {
            ClosureRule::A => ClassLabel::M3,
            ClosureRule::B => ClassLabel::M7,
            ClosureRule::C => ClassLabel::M2,
            ClosureRule::D => ClassLabel::M4,
        }
    }
}

impl fmt::Display for ClosureRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClosureRule::A => "a",
            ClosureRule::B => "b",
            ClosureRule::C => "c",
            ClosureRule::D => "d",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureViolation {
    pub element: NormalForm,
    pub rule: ClosureRule,
    pub class: ClassLabel,
    pub product_class: ClassLabel,
}

impl fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rule ({}): {} in {} but {} * {} lands in {} (expected {})",
            self.rule,
            self.element,
            self.class,
            self.element,
            self.rule.generator(),
            self.product_class,
            self.rule.target()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionViolation {
    pub element: NormalForm,
    pub error: ClassifyError,
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.element, self.error)
    }
}

/// Tests every applicable inclusion for every element of `s`. The result is
/// sorted by the formatted element, then by rule.
pub fn check_closures(s: &ElementSet) -> Vec<ClosureViolation> {
    let members: Vec<&NormalForm> = s.iter().collect();
    let mut violations: Vec<ClosureViolation> = members
        .par_iter()
        .flat_map_iter(|&g| {
            let class = class_of(g);
            ClosureRule::ALL.into_iter().filter(move |r| r.applies_to(class)).filter_map(move |rule| {
                let product_class = class_of(&g.mul_letter(rule.generator()));
                (product_class != rule.target()).then(|| ClosureViolation {
                    element: g.clone(),
                    rule,
                    class,
                    product_class,
                })
            })
        })
        .collect();
    violations.sort_by_cached_key(|v| (v.element.to_string(), v.rule));
    violations
}

/// Elements whose divisor set is not one of the seven admissible ones,
/// sorted by the formatted element.
pub fn check_partition(s: &ElementSet) -> Vec<PartitionViolation> {
    let members: Vec<&NormalForm> = s.iter().collect();
    let mut violations: Vec<PartitionViolation> = members
        .par_iter()
        .filter_map(|&g| {
            right_divisors(&nf_to_diagram(g))
                .err()
                .map(|error| PartitionViolation { element: g.clone(), error })
        })
        .collect();
    violations.sort_by_cached_key(|v| v.element.to_string());
    violations
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> NormalForm {
        s.parse().unwrap()
    }

    #[test]
    fn labels_roundtrip() {
        for c in ClassLabel::ALL {
            assert_eq!(c.to_string().parse::<ClassLabel>().unwrap(), c);
            assert_eq!(c.divisors().label(), Some(c));
        }
        assert!("M8".parse::<ClassLabel>().is_err());
    }

    #[test]
    fn inadmissible_sets_have_no_label() {
        let s = DivisorSet { x0: true, x1: true, ..Default::default() };
        assert_eq!(s.label(), None);
        assert_eq!(s.to_string(), "{X0,X1}");
    }

    #[test]
    fn right_divisible_examples() {
        let x0 = nf_to_diagram(&g("x0"));
        assert!(right_divisible(&x0, 0, Sign::Plus));
        let e = CanonicalDiagram::identity();
        for i in 0..4 {
            assert!(!right_divisible(&e, i, Sign::Plus));
            assert!(!right_divisible(&e, i, Sign::Minus));
        }
        let d = nf_to_diagram(&g("x2 x0^-1"));
        assert!(right_divisible(&d, 1, Sign::Plus));
        assert!(right_divisible(&d, 0, Sign::Minus));
    }

    #[test]
    fn right_divisors_examples() {
        let set = |s| right_divisors(&nf_to_diagram(&g(s))).unwrap();
        assert_eq!(set("x1 x2^-1"), DivisorSet::default());
        assert_eq!(set("x0 x1 x0^-1"), ClassLabel::M2.divisors());
        assert_eq!(set("x1 x5 x3^-2 x0^-2"), ClassLabel::M6.divisors());
    }

    #[test]
    fn class_of_examples() {
        assert_eq!(class_of(&NormalForm::identity()), ClassLabel::M1);
        assert_eq!(class_of(&g("x0^3 x2^-1")), ClassLabel::M3);
        assert_eq!(class_of(&g("x1 x4^-1 x0^-3")), ClassLabel::M6);
    }

    #[test]
    fn closure_examples() {
        assert_eq!(class_of(&g("x2 x0^-1 x0^-1")), ClassLabel::M2);
        assert_eq!(class_of(&g("x0^3 x2^-1 x1^-1")), ClassLabel::M4);
    }

    #[test]
    fn singleton_identity_partition() {
        assert!(check_partition(&ElementSet::singleton(NormalForm::identity())).is_empty());
    }
}
