//! Finite groups in four concrete representations, plus subgroups and
//! quotients of any of them.
//!
//! A [`Group`] is immutable after construction apart from a write-once
//! enumeration cache. Two threads racing to fill the cache compute the same
//! element list, and whichever finishes first is kept.

mod action;
mod element;
mod perm;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::util::{p_part, prime_factors};

pub use action::{is_fixed_point_free, ActionTable};
pub use element::GroupElement;
pub use perm::Permutation;

/// Default bound on the number of elements any group may enumerate.
pub const DEFAULT_CAP: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Additive,
    Multiplicative,
}

pub(crate) enum Kind {
    Permutations {
        degree: usize,
        generators: Vec<Permutation>,
    },
    /// PGL(2, q), or PSL(2, q) when `special`.
    Projective { field: Arc<Field>, special: bool },
    /// Direct product of the additive or the multiplicative groups of fields.
    FieldProduct {
        fields: Vec<Arc<Field>>,
        op: FieldOp,
    },
    Semidirect {
        kernel: Arc<Group>,
        complement: Arc<Group>,
        action: Arc<ActionTable>,
    },
    Subgroup {
        parent: Arc<Group>,
        generators: Vec<GroupElement>,
    },
    /// Elements are the least members of each coset of `normal`.
    Quotient {
        parent: Arc<Group>,
        normal: Arc<Group>,
        reps: HashMap<GroupElement, GroupElement>,
    },
}

struct Enumeration {
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

pub struct Group {
    name: String,
    kind: Kind,
    order_hint: Option<u64>,
    cap: AtomicUsize,
    cache: OnceLock<Enumeration>,
    orders: OnceLock<Vec<u64>>,
    generators: OnceLock<Vec<GroupElement>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order_hint", &self.order_hint)
            .finish()
    }
}

impl Group {
    fn from_kind(name: impl Into<String>, kind: Kind, order_hint: Option<u64>) -> Self {
        Group {
            name: name.into(),
            kind,
            order_hint,
            cap: AtomicUsize::new(DEFAULT_CAP),
            cache: OnceLock::new(),
            orders: OnceLock::new(),
            generators: OnceLock::new(),
        }
    }

    /// Permutation group of the given degree closed over `generators`.
    pub fn permutations(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
        order_hint: Option<u64>,
    ) -> Result<Arc<Self>> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::Input(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        Ok(Arc::new(Self::from_kind(
            name,
            Kind::Permutations { degree, generators },
            order_hint,
        )))
    }

    pub fn projective(name: impl Into<String>, field: Arc<Field>, special: bool) -> Arc<Self> {
        let q = u64::from(field.order());
        let mut order = q * q * q - q;
        if special && q % 2 == 1 {
            order /= 2;
        }
        Arc::new(Self::from_kind(
            name,
            Kind::Projective { field, special },
            Some(order),
        ))
    }

    pub fn field_product(
        name: impl Into<String>,
        fields: Vec<Arc<Field>>,
        op: FieldOp,
    ) -> Arc<Self> {
        let order = fields
            .iter()
            .map(|f| match op {
                FieldOp::Additive => u64::from(f.order()),
                FieldOp::Multiplicative => u64::from(f.order() - 1),
            })
            .product();
        Arc::new(Self::from_kind(
            name,
            Kind::FieldProduct { fields, op },
            Some(order),
        ))
    }

    /// `kernel ⋊ complement` with multiplication
    /// `(k1, c1)(k2, c2) = (k1 · act(c1)(k2), c1 c2)`.
    pub fn semidirect(name: impl Into<String>, action: ActionTable) -> Result<Arc<Self>> {
        action.validate()?;
        let kernel = action.kernel().clone();
        let complement = action.complement().clone();
        let order = kernel.order()? * complement.order()?;
        Ok(Arc::new(Self::from_kind(
            name,
            Kind::Semidirect {
                kernel,
                complement,
                action: Arc::new(action),
            },
            Some(order),
        )))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cap(&self) -> usize {
        self.cap.load(Ordering::Relaxed)
    }

    /// Overrides the enumeration cap. Has no effect once enumerated.
    pub fn set_cap(&self, cap: usize) {
        self.cap.store(cap, Ordering::Relaxed);
    }

    /// Kernel and complement of a semidirect product.
    pub fn factors(&self) -> Option<(&Arc<Group>, &Arc<Group>)> {
        match &self.kind {
            Kind::Semidirect {
                kernel, complement, ..
            } => Some((kernel, complement)),
            _ => None,
        }
    }

    pub fn action(&self) -> Option<&ActionTable> {
        match &self.kind {
            Kind::Semidirect { action, .. } => Some(action),
            _ => None,
        }
    }

    pub fn parent(&self) -> Option<&Arc<Group>> {
        match &self.kind {
            Kind::Subgroup { parent, .. } | Kind::Quotient { parent, .. } => Some(parent),
            _ => None,
        }
    }

    /// `(k, 1)` in a semidirect product.
    pub fn embed_kernel(&self, k: &GroupElement) -> Option<GroupElement> {
        self.factors()
            .map(|(_, c)| GroupElement::pair(k.clone(), c.identity()))
    }

    /// `(1, c)` in a semidirect product.
    pub fn embed_complement(&self, c: &GroupElement) -> Option<GroupElement> {
        self.factors()
            .map(|(k, _)| GroupElement::pair(k.identity(), c.clone()))
    }

    pub fn identity(&self) -> GroupElement {
        match &self.kind {
            Kind::Permutations { degree, .. } => {
                GroupElement::Permutation(Permutation::identity(*degree))
            }
            Kind::Projective { .. } => GroupElement::ProjMat([1, 0, 0, 1]),
            Kind::FieldProduct { fields, op } => GroupElement::DirectPair(match op {
                FieldOp::Additive => vec![0; fields.len()],
                FieldOp::Multiplicative => vec![1; fields.len()],
            }),
            Kind::Semidirect {
                kernel, complement, ..
            } => GroupElement::pair(kernel.identity(), complement.identity()),
            Kind::Subgroup { parent, .. } => parent.identity(),
            Kind::Quotient { parent, reps, .. } => reps[&parent.identity()].clone(),
        }
    }

    /// Group product; fails on elements of the wrong representation.
    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_shape(a)?;
        self.check_shape(b)?;
        Ok(self.mul(a, b))
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_shape(a)?;
        Ok(self.inv(a))
    }

    fn check_shape(&self, a: &GroupElement) -> Result<()> {
        if self.contains(a)? {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "{} {a} is not in {}",
                a.variant(),
                self.name
            )))
        }
    }

    /// Unchecked product.
    ///
    /// # Panics
    ///
    /// If either argument is not an element of this group.
    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        use GroupElement as E;
        match (&self.kind, a, b) {
            (Kind::Permutations { .. }, E::Permutation(x), E::Permutation(y)) => {
                E::Permutation(x.compose(y))
            }
            (Kind::Projective { field, .. }, E::ProjMat(x), E::ProjMat(y)) => {
                E::ProjMat(mat_mul(field, x, y))
            }
            (Kind::FieldProduct { fields, op }, E::DirectPair(x), E::DirectPair(y)) => {
                E::DirectPair(
                    fields
                        .iter()
                        .zip(x.iter().zip(y))
                        .map(|(f, (&u, &v))| match op {
                            FieldOp::Additive => f.add(u, v),
                            FieldOp::Multiplicative => f.mul(u, v),
                        })
                        .collect(),
                )
            }
            (
                Kind::Semidirect {
                    kernel,
                    complement,
                    action,
                },
                E::SemidirectPair(k1, c1),
                E::SemidirectPair(k2, c2),
            ) => {
                let moved = action.apply(c1, k2);
                GroupElement::pair(kernel.mul(k1, &moved), complement.mul(c1, c2))
            }
            (Kind::Subgroup { parent, .. }, _, _) => parent.mul(a, b),
            (Kind::Quotient { parent, reps, .. }, _, _) => reps[&parent.mul(a, b)].clone(),
            _ => panic!(
                "{} and {} are not both in {}",
                a.variant(),
                b.variant(),
                self.name
            ),
        }
    }

    /// Unchecked inverse; panics on foreign elements like [`Group::mul`].
    pub fn inv(&self, a: &GroupElement) -> GroupElement {
        use GroupElement as E;
        match (&self.kind, a) {
            (Kind::Permutations { .. }, E::Permutation(x)) => E::Permutation(x.inverse()),
            (Kind::Projective { field, .. }, E::ProjMat([a, b, c, d])) => {
                E::ProjMat(canonical(field, [*d, field.neg(*b), field.neg(*c), *a]))
            }
            (Kind::FieldProduct { fields, op }, E::DirectPair(x)) => E::DirectPair(
                fields
                    .iter()
                    .zip(x)
                    .map(|(f, &u)| match op {
                        FieldOp::Additive => f.neg(u),
                        FieldOp::Multiplicative => f.inv(u).expect("units are invertible"),
                    })
                    .collect(),
            ),
            (
                Kind::Semidirect {
                    kernel,
                    complement,
                    action,
                },
                E::SemidirectPair(k, c),
            ) => {
                let c_inv = complement.inv(c);
                let k_inv = kernel.inv(k);
                let moved = action.apply(&c_inv, &k_inv);
                GroupElement::pair(moved, c_inv)
            }
            (Kind::Subgroup { parent, .. }, _) => parent.inv(a),
            (Kind::Quotient { parent, reps, .. }, _) => reps[&parent.inv(a)].clone(),
            _ => panic!("{} is not in {}", a.variant(), self.name),
        }
    }

    pub fn conjugate(&self, g: &GroupElement, x: &GroupElement) -> GroupElement {
        self.mul(&self.mul(g, x), &self.inv(g))
    }

    /// Membership test. Structural for the concrete representations; falls
    /// back to enumeration for permutation groups, subgroups and quotients.
    pub fn contains(&self, a: &GroupElement) -> Result<bool> {
        use GroupElement as E;
        Ok(match (&self.kind, a) {
            (Kind::Projective { field, special }, E::ProjMat(m)) => {
                let q = field.order();
                m.iter().all(|&x| x < q) && m.iter().find(|&&x| x != 0) == Some(&1) && {
                    let det = det(field, m);
                    det != 0 && (!special || field.is_square(det))
                }
            }
            (Kind::FieldProduct { fields, op }, E::DirectPair(x)) => {
                x.len() == fields.len()
                    && fields
                        .iter()
                        .zip(x)
                        .all(|(f, &u)| u < f.order() && (*op == FieldOp::Additive || u != 0))
            }
            (
                Kind::Semidirect {
                    kernel, complement, ..
                },
                E::SemidirectPair(k, c),
            ) => kernel.contains(k)? && complement.contains(c)?,
            (Kind::Permutations { degree, .. }, E::Permutation(p)) => {
                p.degree() == *degree && self.index_of(a)?.is_some()
            }
            (Kind::Subgroup { .. } | Kind::Quotient { .. }, _) => self.index_of(a)?.is_some(),
            _ => false,
        })
    }

    /// Group order, from the construction when known, else by enumeration.
    pub fn order(&self) -> Result<u64> {
        match self.order_hint {
            Some(n) => Ok(n),
            None => Ok(self.elements()?.len() as u64),
        }
    }

    fn order_bound(&self) -> u64 {
        if let Some(n) = self.order_hint {
            return n;
        }
        if let Some(e) = self.cache.get() {
            return e.elements.len() as u64;
        }
        match &self.kind {
            Kind::Subgroup { parent, .. } | Kind::Quotient { parent, .. } => parent.order_bound(),
            _ => self.cap() as u64,
        }
    }

    /// Least `n >= 1` with `g^n = 1`, by repeated multiplication.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        let id = self.identity();
        let bound = self.order_bound();
        let mut x = g.clone();
        let mut n = 1;
        while x != id {
            x = self.mul(&x, g);
            n += 1;
            assert!(
                n <= bound,
                "element {g} of {} has no finite order",
                self.name
            );
        }
        n
    }

    /// All elements, enumerated once and cached.
    pub fn elements(&self) -> Result<&[GroupElement]> {
        Ok(&self.enumeration()?.elements)
    }

    pub fn index_of(&self, g: &GroupElement) -> Result<Option<usize>> {
        Ok(self.enumeration()?.index.get(g).copied())
    }

    fn enumeration(&self) -> Result<&Enumeration> {
        if let Some(e) = self.cache.get() {
            return Ok(e);
        }
        let elements = self.enumerate_uncached()?;
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let _ = self.cache.set(Enumeration { elements, index });
        Ok(self.cache.get().expect("cache filled above"))
    }

    fn enumerate_uncached(&self) -> Result<Vec<GroupElement>> {
        let cap = self.cap();
        if let Some(n) = self.order_hint {
            if n > cap as u64 {
                return Err(Error::Capacity {
                    limit: cap,
                    partial: 0,
                });
            }
        }
        match &self.kind {
            Kind::Permutations { generators, .. } => {
                let gens: Vec<_> = generators
                    .iter()
                    .cloned()
                    .map(GroupElement::Permutation)
                    .collect();
                self.closure(&gens, cap)
            }
            Kind::Projective { field, special } => Ok(enumerate_projective(field, *special)),
            Kind::FieldProduct { fields, op } => {
                let ranges: Vec<Vec<u32>> = fields
                    .iter()
                    .map(|f| match op {
                        FieldOp::Additive => (0..f.order()).collect(),
                        FieldOp::Multiplicative => (1..f.order()).collect(),
                    })
                    .collect();
                Ok(cartesian(&ranges)
                    .into_iter()
                    .map(GroupElement::DirectPair)
                    .collect())
            }
            Kind::Semidirect {
                kernel, complement, ..
            } => {
                let cs = complement.elements()?;
                Ok(kernel
                    .elements()?
                    .iter()
                    .flat_map(|k| {
                        cs.iter()
                            .map(move |c| GroupElement::pair(k.clone(), c.clone()))
                    })
                    .collect())
            }
            Kind::Subgroup { generators, .. } => self.closure(generators, cap),
            Kind::Quotient { parent, reps, .. } => {
                let mut out: Vec<GroupElement> = parent
                    .elements()?
                    .iter()
                    .filter(|g| reps[*g] == **g)
                    .cloned()
                    .collect();
                out.sort();
                Ok(out)
            }
        }
    }

    /// Breadth-first closure of `gens` under right multiplication, in
    /// discovery order. Fails once more than `limit` elements are found.
    pub fn closure(&self, gens: &[GroupElement], limit: usize) -> Result<Vec<GroupElement>> {
        let id = self.identity();
        let mut seen: HashSet<GroupElement> = HashSet::from([id.clone()]);
        let mut order = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in gens {
                let y = self.mul(&order[i], s);
                if seen.insert(y.clone()) {
                    if order.len() >= limit {
                        return Err(Error::Capacity {
                            limit,
                            partial: order.len(),
                        });
                    }
                    queue.push_back(order.len());
                    order.push(y);
                }
            }
        }
        Ok(order)
    }

    /// Element orders aligned with [`Group::elements`], computed in parallel.
    pub fn element_orders(&self) -> Result<&[u64]> {
        if let Some(o) = self.orders.get() {
            return Ok(o);
        }
        let orders = self
            .elements()?
            .par_iter()
            .map(|g| self.element_order(g))
            .collect();
        let _ = self.orders.set(orders);
        Ok(self.orders.get().expect("orders filled above"))
    }

    /// A generating set: the construction's own when it has one, otherwise
    /// picked greedily from the enumeration.
    pub fn generators(&self) -> Result<&[GroupElement]> {
        if let Some(g) = self.generators.get() {
            return Ok(g);
        }
        let id = self.identity();
        let mut gens: Vec<GroupElement> = match &self.kind {
            Kind::Permutations { generators, .. } => generators
                .iter()
                .cloned()
                .map(GroupElement::Permutation)
                .collect(),
            Kind::FieldProduct { fields, op } => {
                let unit = match op {
                    FieldOp::Additive => 0,
                    FieldOp::Multiplicative => 1,
                };
                let mut out = Vec::new();
                for (i, f) in fields.iter().enumerate() {
                    let values: Vec<u32> = match op {
                        FieldOp::Additive => {
                            (0..f.degree()).map(|j| f.characteristic().pow(j)).collect()
                        }
                        FieldOp::Multiplicative => vec![f.multiplicative_generator().code()],
                    };
                    for v in values {
                        let mut x = vec![unit; fields.len()];
                        x[i] = v;
                        out.push(GroupElement::DirectPair(x));
                    }
                }
                out
            }
            Kind::Semidirect {
                kernel, complement, ..
            } => {
                let mut out = Vec::new();
                for k in kernel.generators()? {
                    out.push(GroupElement::pair(k.clone(), complement.identity()));
                }
                for c in complement.generators()? {
                    out.push(GroupElement::pair(kernel.identity(), c.clone()));
                }
                out
            }
            Kind::Subgroup { generators, .. } => generators.clone(),
            Kind::Quotient { parent, reps, .. } => parent
                .generators()?
                .iter()
                .map(|g| reps[g].clone())
                .collect(),
            Kind::Projective { .. } => self.greedy_generators()?,
        };
        gens.retain(|g| *g != id);
        let mut seen = HashSet::new();
        gens.retain(|g| seen.insert(g.clone()));
        let _ = self.generators.set(gens);
        Ok(self.generators.get().expect("generators filled above"))
    }

    fn greedy_generators(&self) -> Result<Vec<GroupElement>> {
        let mut gens = Vec::new();
        let mut span: HashSet<GroupElement> = HashSet::from([self.identity()]);
        for g in self.elements()? {
            if !span.contains(g) {
                gens.push(g.clone());
                span = self.closure(&gens, usize::MAX)?.into_iter().collect();
            }
        }
        Ok(gens)
    }

    /// The subgroup generated by `gens`, sharing this group's multiplication.
    pub fn subgroup_generated(
        self: &Arc<Self>,
        name: impl Into<String>,
        gens: &[GroupElement],
    ) -> Result<Arc<Group>> {
        for g in gens {
            if !self.contains(g)? {
                return Err(Error::Input(format!(
                    "{g} is not an element of {}",
                    self.name
                )));
            }
        }
        let id = self.identity();
        let generators = gens.iter().filter(|g| **g != id).cloned().collect();
        let sub = Group::from_kind(
            name,
            Kind::Subgroup {
                parent: self.clone(),
                generators,
            },
            None,
        );
        sub.set_cap(self.cap());
        sub.enumeration()?;
        Ok(Arc::new(sub))
    }

    /// The quotient by a normal subgroup, on least coset representatives.
    pub fn quotient(self: &Arc<Self>, normal: &Arc<Group>) -> Result<Arc<Group>> {
        if !self.is_normal(normal)? {
            return Err(Error::Input(format!(
                "{} is not normal in {}",
                normal.name, self.name
            )));
        }
        let mut reps = HashMap::new();
        let mut sorted = self.elements()?.to_vec();
        sorted.sort();
        let members = normal.elements()?;
        for g in sorted {
            if reps.contains_key(&g) {
                continue;
            }
            for h in members {
                reps.insert(self.mul(&g, h), g.clone());
            }
        }
        let name = format!("{}/{}", self.name, normal.name);
        let q = Group::from_kind(
            name,
            Kind::Quotient {
                parent: self.clone(),
                normal: normal.clone(),
                reps,
            },
            None,
        );
        q.set_cap(self.cap());
        Ok(Arc::new(q))
    }

    /// The coset representative of a parent element in a quotient.
    pub fn coset_of(&self, g: &GroupElement) -> Option<GroupElement> {
        match &self.kind {
            Kind::Quotient { reps, .. } => reps.get(g).cloned(),
            _ => None,
        }
    }

    pub fn normal_subgroup(&self) -> Option<&Arc<Group>> {
        match &self.kind {
            Kind::Quotient { normal, .. } => Some(normal),
            _ => None,
        }
    }

    /// Generators pairwise commute.
    pub fn is_abelian(&self) -> Result<bool> {
        let gens = self.generators()?;
        Ok(gens.iter().enumerate().all(|(i, a)| {
            gens[i + 1..]
                .iter()
                .all(|b| self.mul(a, b) == self.mul(b, a))
        }))
    }

    pub fn is_cyclic(&self) -> Result<bool> {
        let n = self.order()?;
        Ok(self.element_orders()?.contains(&n))
    }

    /// Whether `h`, a subgroup of this group, is normalized by every
    /// generator. For finite groups `g H g⁻¹ ⊆ H` on generators of both
    /// sides is equivalent to `g H g⁻¹ = H` for all `g`.
    pub fn is_normal(&self, h: &Group) -> Result<bool> {
        let hs = h.generators()?;
        for g in self.generators()? {
            for x in hs {
                if !h.contains(&self.conjugate(g, x))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// For every prime `p | |G|` the `p`-elements form a subgroup of order
    /// the `p`-part of `|G|`, i.e. every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> Result<bool> {
        let n = self.order()?;
        let elements = self.elements()?;
        let orders = self.element_orders()?;
        for p in prime_factors(n) {
            let sp: Vec<&GroupElement> = elements
                .iter()
                .zip(orders)
                .filter(|(_, &o)| p_part(o, p) == o)
                .map(|(g, _)| g)
                .collect();
            if sp.len() as u64 != p_part(n, p) || !self.set_is_closed(&sp)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether a set containing the identity is closed under multiplication,
    /// by growing the subgroup it generates and stopping as soon as that
    /// outgrows the set.
    pub fn set_is_closed(&self, set: &[&GroupElement]) -> Result<bool> {
        let members: HashSet<&GroupElement> = set.iter().copied().collect();
        let mut gens = Vec::new();
        let mut span: HashSet<GroupElement> = HashSet::from([self.identity()]);
        for &g in set {
            if span.contains(g) {
                continue;
            }
            gens.push(g.clone());
            match self.closure(&gens, set.len()) {
                Ok(c) => span = c.into_iter().collect(),
                Err(Error::Capacity { .. }) => return Ok(false),
                Err(e) => return Err(e),
            }
            if span.iter().any(|x| !members.contains(x)) {
                return Ok(false);
            }
        }
        Ok(span.len() == members.len())
    }
}

fn cartesian(ranges: &[Vec<u32>]) -> Vec<Vec<u32>> {
    ranges.iter().fold(vec![Vec::new()], |acc, r| {
        acc.iter()
            .flat_map(|prefix| {
                r.iter().map(move |&x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    })
}

fn det(f: &Field, [a, b, c, d]: &[u32; 4]) -> u32 {
    f.sub(f.mul(*a, *d), f.mul(*b, *c))
}

fn mat_mul(f: &Field, [a, b, c, d]: &[u32; 4], [e, g, h, k]: &[u32; 4]) -> [u32; 4] {
    canonical(
        f,
        [
            f.add(f.mul(*a, *e), f.mul(*b, *h)),
            f.add(f.mul(*a, *g), f.mul(*b, *k)),
            f.add(f.mul(*c, *e), f.mul(*d, *h)),
            f.add(f.mul(*c, *g), f.mul(*d, *k)),
        ],
    )
}

/// Scales a nonzero matrix so its first nonzero entry is 1.
pub fn canonical(f: &Field, m: [u32; 4]) -> [u32; 4] {
    let lead = *m
        .iter()
        .find(|&&x| x != 0)
        .expect("zero matrix has no projective class");
    if lead == 1 {
        return m;
    }
    let s = f.inv(lead).expect("lead entry is nonzero");
    m.map(|x| f.mul(x, s))
}

fn enumerate_projective(f: &Field, special: bool) -> Vec<GroupElement> {
    let q = f.order();
    let keep = |m: &[u32; 4]| {
        let d = det(f, m);
        d != 0 && (!special || f.is_square(d))
    };
    let mut out = Vec::new();
    // First nonzero entry is b (a = 0) ...
    for c in 0..q {
        for d in 0..q {
            let m = [0, 1, c, d];
            if keep(&m) {
                out.push(GroupElement::ProjMat(m));
            }
        }
    }
    // ... or a itself.
    for b in 0..q {
        for c in 0..q {
            for d in 0..q {
                let m = [1, b, c, d];
                if keep(&m) {
                    out.push(GroupElement::ProjMat(m));
                }
            }
        }
    }
    out
}
