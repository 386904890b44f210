//! Named groups: PGL(2,q), PSL(2,q), alternating and symmetric groups, and
//! the three solvable groups whose prime graph coincides with Γ(PGL(2,9)).
//!
//! The solvable groups are built as semidirect products of additive groups
//! of finite fields by multiplicative (and, for G3, semilinear) actions:
//!
//! * G1 = GF(81)⁺ ⋊ GF(81)^×, multiplication action. Frobenius, kernel an
//!   abelian 3-group, complement cyclic of order 80.
//! * G2 = (GF(4)⁺ × GF(25)⁺) ⋊ ⟨(ω, β)⟩ with ω of order 3 in GF(4)^× and
//!   β = α⁸ of order 3 in GF(25)^×, acting coordinate-wise. Frobenius with a
//!   cyclic complement of order 3. The full unit group GF(4)^× × GF(25)^×
//!   would not do: `(h, 1)` fixes every `(0, y)`.
//! * G3 = GF(25)⁺ ⋊ (⟨β⟩ ⋊ ⟨γ⟩), β acting by multiplication and γ by the
//!   field automorphism `x -> x⁵`. Letting γ act trivially is not an action
//!   at all, since `γβγ⁻¹ = β⁻¹` must act as multiplication by `β⁻¹`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::groups::{ActionTable, FieldOp, Group, GroupElement, Permutation};
use crate::util::prime_power;

fn field_for(q: u64) -> Result<Arc<Field>> {
    let (p, k) = prime_power(q).ok_or_else(|| Error::Input(format!("{q} is not a prime power")))?;
    Ok(Arc::new(Field::new(p, k)?))
}

/// PGL(2, q) on canonical projective matrices, order `q³ - q`.
///
/// For even `q` the name records that the group coincides with PSL(2, q).
pub fn pgl2(q: u64) -> Result<Arc<Group>> {
    let field = field_for(q)?;
    let name = if q.is_multiple_of(2) {
        format!("PGL(2,{q}) [even q: = PSL(2,{q})]")
    } else {
        format!("PGL(2,{q})")
    };
    Ok(Group::projective(name, field, false))
}

/// PSL(2, q): canonical matrices of square determinant.
pub fn psl2(q: u64) -> Result<Arc<Group>> {
    let field = field_for(q)?;
    Ok(Group::projective(format!("PSL(2,{q})"), field, true))
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i))
}

fn cycle(degree: usize, points: impl IntoIterator<Item = u32>) -> Permutation {
    Permutation::from_cycles(degree, &[points.into_iter().collect()]).expect("standard generator")
}

/// A_n generated by the 3-cycles `(k k+1 k+2)`.
pub fn alternating(n: usize) -> Result<Arc<Group>> {
    let gens = (1..=n.saturating_sub(2) as u32)
        .map(|k| cycle(n, [k, k + 1, k + 2]))
        .collect();
    let order = factorial(n).map(|f| (f / 2).max(1));
    Group::permutations(format!("A{n}"), n, gens, order)
}

/// S_n generated by `(1 2)` and `(1 2 ... n)`.
pub fn symmetric(n: usize) -> Result<Arc<Group>> {
    let gens = if n >= 2 {
        vec![cycle(n, [1, 2]), cycle(n, 1..=n as u32)]
    } else {
        Vec::new()
    };
    Group::permutations(format!("S{n}"), n, gens, factorial(n))
}

/// GF(p^k)⁺ ⋊ C_m, where C_m is the order-`m` subgroup of the unit group
/// acting by multiplication.
pub fn frobenius_field(p: u32, k: u32, m: u64) -> Result<Arc<Group>> {
    frobenius_field_named(p, k, m, format!("frobfield({p},{k},{m})"))
}

fn frobenius_field_named(p: u32, k: u32, m: u64, name: String) -> Result<Arc<Group>> {
    let field = Arc::new(Field::new(p, k)?);
    let units = u64::from(field.order() - 1);
    if m == 0 || units % m != 0 {
        return Err(Error::Input(format!(
            "{m} does not divide |GF({})^×| = {units}",
            field.order()
        )));
    }
    let q = field.order();
    let kernel = Group::field_product(format!("GF({q})+"), vec![field.clone()], FieldOp::Additive);
    let unit_group = Group::field_product(
        format!("GF({q})^×"),
        vec![field.clone()],
        FieldOp::Multiplicative,
    );
    let gen = field.pow(field.multiplicative_generator().code(), units / m);
    let complement =
        unit_group.subgroup_generated(format!("C{m}"), &[GroupElement::DirectPair(vec![gen])])?;

    let f = field.clone();
    let action = ActionTable::from_fn(kernel, complement, move |c, v| scale(&[f.as_ref()], c, v))?;
    Group::semidirect(name, action)
}

/// Coordinate-wise product of a unit tuple with a vector.
fn scale(fields: &[&Field], c: &GroupElement, v: &GroupElement) -> GroupElement {
    match (c, v) {
        (GroupElement::DirectPair(c), GroupElement::DirectPair(v)) => GroupElement::DirectPair(
            fields
                .iter()
                .zip(c.iter().zip(v))
                .map(|(f, (&a, &x))| f.mul(a, x))
                .collect(),
        ),
        _ => unreachable!("field groups carry direct pairs"),
    }
}

pub fn paper_g1() -> Result<Arc<Group>> {
    frobenius_field_named(3, 4, 80, "paper.g1".into())
}

pub fn paper_g2() -> Result<Arc<Group>> {
    let f4 = Arc::new(Field::new(2, 2)?);
    let f25 = Arc::new(Field::new(5, 2)?);
    let omega = f4.multiplicative_generator().code();
    let beta = f25.pow(f25.multiplicative_generator().code(), 8);

    let fields = vec![f4.clone(), f25.clone()];
    let kernel = Group::field_product("GF(4)+ x GF(25)+", fields.clone(), FieldOp::Additive);
    let units = Group::field_product("GF(4)^× x GF(25)^×", fields, FieldOp::Multiplicative);
    let complement =
        units.subgroup_generated("C3", &[GroupElement::DirectPair(vec![omega, beta])])?;

    let action = ActionTable::from_fn(kernel, complement, move |c, v| {
        scale(&[f4.as_ref(), f25.as_ref()], c, v)
    })?;
    Group::semidirect("paper.g2", action)
}

/// The order-6 group ⟨β⟩ ⋊ ⟨γ⟩ ≅ S3 inside ΓL(1, 25), with γ acting on
/// ⟨β⟩ by the 5-power map.
pub fn g3_top(f25: &Arc<Field>) -> Result<Arc<Group>> {
    let beta = f25.pow(f25.multiplicative_generator().code(), 8);
    let units = Group::field_product("GF(25)^×", vec![f25.clone()], FieldOp::Multiplicative);
    let c3 = units.subgroup_generated("<beta>", &[GroupElement::DirectPair(vec![beta])])?;
    let swap = Permutation::from_cycles(2, &[vec![1, 2]])?;
    let c2 = Group::permutations("<gamma>", 2, vec![swap], Some(2))?;

    let f = f25.clone();
    let action = ActionTable::from_fn(c3, c2, move |s, b| match (s, b) {
        (GroupElement::Permutation(s), GroupElement::DirectPair(b)) if !s.is_identity() => {
            GroupElement::DirectPair(vec![f.pow(b[0], u64::from(f.characteristic()))])
        }
        _ => b.clone(),
    })?;
    Group::semidirect("T", action)
}

pub fn paper_g3() -> Result<Arc<Group>> {
    let f25 = Arc::new(Field::new(5, 2)?);
    let kernel = Group::field_product("GF(25)+", vec![f25.clone()], FieldOp::Additive);
    let top = g3_top(&f25)?;

    let f = f25.clone();
    let action = ActionTable::from_fn(kernel, top, move |t, v| semilinear(&f, t, v))?;
    Group::semidirect("paper.g3", action)
}

/// `(b, s)` acts on `v` as `b · s(v)`, with `s` the identity or `x -> x^p`.
fn semilinear(f: &Field, t: &GroupElement, v: &GroupElement) -> GroupElement {
    match (t, v) {
        (GroupElement::SemidirectPair(b, s), GroupElement::DirectPair(v)) => {
            let (GroupElement::DirectPair(b), GroupElement::Permutation(s)) =
                (b.as_ref(), s.as_ref())
            else {
                unreachable!("T is a pair of a unit and a permutation")
            };
            let x = if s.is_identity() {
                v[0]
            } else {
                f.pow(v[0], u64::from(f.characteristic()))
            };
            GroupElement::DirectPair(vec![f.mul(b[0], x)])
        }
        _ => unreachable!("G3 acts on direct pairs"),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::spectra::{graphs_equal, mu, prime_graph, spectrum};

    #[test]
    fn projective_orders() {
        assert_eq!(pgl2(9).unwrap().elements().unwrap().len(), 720);
        assert_eq!(pgl2(3).unwrap().elements().unwrap().len(), 24);
        assert_eq!(psl2(9).unwrap().elements().unwrap().len(), 360);
        assert!(pgl2(12).is_err());
        assert!(pgl2(4).unwrap().name().contains("even"));
        assert_eq!(psl2(4).unwrap().elements().unwrap().len(), 60);
    }

    #[test]
    fn psl29_has_index_two_in_pgl29() {
        let pgl = pgl2(9).unwrap();
        let psl = psl2(9).unwrap();
        for g in psl.elements().unwrap() {
            assert!(pgl.contains(g).unwrap());
        }
        let inside = pgl
            .elements()
            .unwrap()
            .iter()
            .filter(|g| psl.contains(g).unwrap())
            .count();
        assert_eq!(inside * 2, 720);
    }

    #[test]
    fn permutation_families() {
        assert_eq!(alternating(5).unwrap().elements().unwrap().len(), 60);
        assert_eq!(symmetric(5).unwrap().elements().unwrap().len(), 120);
        let a3 = alternating(3).unwrap();
        assert_eq!(a3.order().unwrap(), 3);
        assert!(a3.is_cyclic().unwrap());
        assert_eq!(alternating(1).unwrap().elements().unwrap().len(), 1);
        assert_eq!(symmetric(1).unwrap().elements().unwrap().len(), 1);
        for n in 2..=6 {
            assert_eq!(
                alternating(n).unwrap().elements().unwrap().len() as u64,
                factorial(n).unwrap() / 2
            );
        }
    }

    #[test]
    fn s9_fits_but_a10_exceeds_the_default_cap() {
        assert!(matches!(
            alternating(10).unwrap().elements(),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn g1_shape() {
        let g = paper_g1().unwrap();
        assert_eq!(g.order().unwrap(), 6480);
        let (k, c) = g.factors().unwrap();
        assert!(k.is_abelian().unwrap());
        assert!(c.is_cyclic().unwrap());
        assert_eq!(c.order().unwrap(), 80);
        assert!(g.action().unwrap().is_fixed_point_free());
        assert!(spectrum(&g).unwrap().contains(10));
    }

    #[test]
    fn frobenius_field_reproduces_g1() {
        let a = frobenius_field(3, 4, 80).unwrap();
        let b = paper_g1().unwrap();
        assert_eq!(a.elements().unwrap(), b.elements().unwrap());
        let x = &a.elements().unwrap()[1234];
        let y = &a.elements().unwrap()[4321];
        assert_eq!(a.mul(x, y), b.mul(x, y));
    }

    #[test]
    fn frobenius_field_parameters() {
        assert_eq!(frobenius_field(5, 2, 3).unwrap().order().unwrap(), 75);
        assert!(matches!(frobenius_field(5, 2, 7), Err(Error::Input(_))));
        let degenerate = frobenius_field(5, 2, 1).unwrap();
        assert_eq!(degenerate.order().unwrap(), 25);
    }

    #[test]
    fn g2_shape() {
        let g = paper_g2().unwrap();
        assert_eq!(g.order().unwrap(), 300);
        let (k, c) = g.factors().unwrap();
        assert_eq!(k.order().unwrap(), 100);
        assert!(c.is_cyclic().unwrap());
        assert_eq!(c.order().unwrap(), 3);
        assert!(g.action().unwrap().is_fixed_point_free());
        assert!(spectrum(k).unwrap().contains(10));
    }

    #[test]
    fn g2_with_full_unit_group_is_not_fixed_point_free() {
        let f4 = Arc::new(Field::new(2, 2).unwrap());
        let f25 = Arc::new(Field::new(5, 2).unwrap());
        let fields = vec![f4.clone(), f25.clone()];
        let kernel = Group::field_product("V", fields.clone(), FieldOp::Additive);
        let units = Group::field_product("H1 x H2", fields, FieldOp::Multiplicative);
        assert_eq!(units.order().unwrap(), 72);
        let table = ActionTable::from_fn(kernel, units, move |c, v| {
            scale(&[f4.as_ref(), f25.as_ref()], c, v)
        })
        .unwrap();
        table.validate().unwrap();
        let (c, k) = table.fixed_point().unwrap();
        // (h, 1) fixes (0, y).
        let (GroupElement::DirectPair(c), GroupElement::DirectPair(k)) = (c, k) else {
            unreachable!()
        };
        assert!(c[1] == 1 || k[0] == 0 || c[0] == 1);
    }

    #[test]
    fn g3_shape() {
        let g = paper_g3().unwrap();
        assert_eq!(g.order().unwrap(), 150);
        assert_eq!(
            spectrum(&g).unwrap().orders(),
            &BTreeSet::from([1, 2, 3, 5, 10])
        );
        let (_, top) = g.factors().unwrap();
        assert!(!top.is_abelian().unwrap());
        // gamma alone fixes the prime subfield
        assert!(!g.action().unwrap().is_fixed_point_free());
    }

    #[test]
    fn g3_with_gamma_acting_trivially_is_rejected() {
        let f25 = Arc::new(Field::new(5, 2).unwrap());
        let kernel = Group::field_product("V", vec![f25.clone()], FieldOp::Additive);
        let top = g3_top(&f25).unwrap();
        let f = f25.clone();
        let table = ActionTable::from_fn(kernel, top, move |t, v| match (t, v) {
            (GroupElement::SemidirectPair(b, _), GroupElement::DirectPair(v)) => {
                let GroupElement::DirectPair(b) = b.as_ref() else {
                    unreachable!()
                };
                GroupElement::DirectPair(vec![f.mul(b[0], v[0])])
            }
            _ => unreachable!(),
        })
        .unwrap();
        let err = Group::semidirect("untwisted", table).unwrap_err();
        assert!(
            matches!(err, Error::Construction(ref m) if m.contains("homomorphism")),
            "{err}"
        );
    }

    #[test]
    fn all_three_graphs_match_pgl29() {
        let reference = prime_graph(&spectrum(&pgl2(9).unwrap()).unwrap());
        for g in [paper_g1(), paper_g2(), paper_g3()] {
            let g = g.unwrap();
            assert!(
                graphs_equal(&prime_graph(&spectrum(&g).unwrap()), &reference),
                "{}",
                g.name()
            );
        }
        assert_eq!(
            mu(&spectrum(&pgl2(9).unwrap()).unwrap()).maxima(),
            &BTreeSet::from([3, 8, 10])
        );
    }
}
