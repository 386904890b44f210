//! Witness-based verification of Frobenius and 2-Frobenius structure, and
//! sorting groups into the four shapes that share the prime graph of
//! PGL(2,9).
//!
//! Verification carries the correctness burden. The searches here
//! ([`find_frobenius_structure`], [`find_2frobenius_structure`]) are sound
//! but incomplete: anything they return has been verified, and returning
//! `None` makes no claim.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions;
use crate::error::{Error, Result};
use crate::groups::{Group, GroupElement};
use crate::spectra::{components, graphs_equal, mu, prime_graph, spectrum, PrimeGraph};
use crate::util::{gcd, p_part, prime_factors};

/// A claimed Frobenius decomposition `G = K ⋊ C`.
#[derive(Clone, Debug)]
pub struct FrobeniusWitness {
    pub kernel: Arc<Group>,
    pub complement: Arc<Group>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            witnesses: Vec::new(),
        }
    }

    fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            detail: detail.into(),
            witnesses: Vec::new(),
        }
    }

    fn with_witnesses(mut self, w: impl IntoIterator<Item = String>) -> Self {
        self.witnesses.extend(w);
        self
    }
}

/// Named checks; the report passes when none of them failed.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
            overall: Status::Pass,
        }
    }

    pub fn push(&mut self, check: Check) {
        if check.status == Status::Fail {
            self.overall = Status::Fail;
        }
        self.checks.push(check);
    }

    fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn fmt_set(s: &BTreeSet<u64>) -> String {
    let items: Vec<String> = s.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn primes_of(n: u64) -> BTreeSet<u64> {
    prime_factors(n).into_iter().collect()
}

fn ensure_within(g: &Group, h: &Group) -> Result<()> {
    for x in h.generators()? {
        if !g.contains(x)? {
            return Err(Error::Input(format!(
                "{x} from {} is not in {}",
                h.name(),
                g.name()
            )));
        }
    }
    Ok(())
}

/// Checks a Frobenius decomposition, reporting each condition separately:
/// kernel normality, trivial intersection with matching order, fixed-point
/// free conjugation, kernel nilpotency, `|K| ≡ 1 (mod |C|)`, and the Sylow
/// shape of the complement.
pub fn verify_frobenius(g: &Group, w: &FrobeniusWitness) -> Result<VerificationReport> {
    ensure_within(g, &w.kernel)?;
    ensure_within(g, &w.complement)?;
    let (k, c) = (&w.kernel, &w.complement);
    let mut report =
        VerificationReport::new(format!("{} as {} ⋊ {}", g.name(), k.name(), c.name()));
    let nk = k.order()?;
    let nc = c.order()?;
    let ng = g.order()?;

    report.push(Check::new(
        "kernel and complement proper and nontrivial",
        nk > 1 && nc > 1 && nk < ng && nc < ng,
        format!("|K| = {nk}, |C| = {nc}, |G| = {ng}"),
    ));
    report.push(normality_check("kernel normal", g, k)?);

    let kid = g.identity();
    let shared: Vec<String> = c
        .elements()?
        .iter()
        .filter(|x| **x != kid)
        .filter_map(|x| match k.contains(x) {
            Ok(true) => Some(Ok(x.to_string())),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .take(1)
        .collect::<Result<_>>()?;
    report.push(
        Check::new(
            "trivial intersection and |K|·|C| = |G|",
            shared.is_empty() && nk * nc == ng,
            format!("|K|·|C| = {nk}·{nc} = {} vs |G| = {ng}", nk * nc),
        )
        .with_witnesses(shared),
    );

    report.push(match conjugation_fixed_point(g, k, c)? {
        None => Check::new(
            "fixed-point-free conjugation",
            true,
            format!(
                "no c ≠ 1 in C fixes any k ≠ 1 in K ({} pairs)",
                (nc - 1) * (nk - 1)
            ),
        ),
        Some((x, y)) => Check::new(
            "fixed-point-free conjugation",
            false,
            "c·k·c⁻¹ = k for the least pair".to_string(),
        )
        .with_witnesses([x.to_string(), y.to_string()]),
    });

    let nilpotent = k.is_nilpotent()?;
    report.push(Check::new(
        "kernel nilpotent",
        nilpotent,
        if nilpotent {
            "every Sylow subgroup of K is normal"
        } else {
            "some Sylow subgroup of K is not normal"
        },
    ));

    let congruent = nc > 0 && nk % nc == 1 % nc;
    report.push(Check::new(
        "kernel ≡ 1 mod complement",
        congruent,
        format!("{nk} {} 1 (mod {nc})", if congruent { "≡" } else { "≢" }),
    ));

    report.push(complement_sylow_check(c)?);
    report.push(Check::skipped(
        "non-solvable complement clause",
        "SL(2,5) × M subgroup test not implemented",
    ));
    Ok(report)
}

fn normality_check(name: &str, g: &Group, h: &Group) -> Result<Check> {
    for x in g.generators()? {
        for y in h.generators()? {
            let z = g.conjugate(x, y);
            if !h.contains(&z)? {
                return Ok(
                    Check::new(name, false, format!("g·h·g⁻¹ leaves {}", h.name()))
                        .with_witnesses([x.to_string(), y.to_string()]),
                );
            }
        }
    }
    Ok(Check::new(
        name,
        true,
        format!(
            "{} is normalized by every generator of {}",
            h.name(),
            g.name()
        ),
    ))
}

/// Least `(c, k)` in enumeration order with `c, k ≠ 1` and `c k c⁻¹ = k`.
fn conjugation_fixed_point(
    g: &Group,
    k: &Group,
    c: &Group,
) -> Result<Option<(GroupElement, GroupElement)>> {
    let id = g.identity();
    let ks = k.elements()?;
    Ok(c.elements()?
        .par_iter()
        .filter(|x| **x != id)
        .find_map_first(|x| {
            let x_inv = g.inv(x);
            ks.iter()
                .filter(|y| **y != id)
                .find(|y| g.mul(&g.mul(x, y), &x_inv) == **y)
                .map(|y| (x.clone(), y.clone()))
        }))
}

/// A Sylow `p`-subgroup, grown greedily from `p`-elements: a maximal
/// `p`-subgroup is always a Sylow subgroup.
pub fn sylow_subgroup(g: &Arc<Group>, p: u64) -> Result<Arc<Group>> {
    let target = p_part(g.order()?, p);
    let elements = g.elements()?;
    let orders = g.element_orders()?;
    let mut gens: Vec<GroupElement> = Vec::new();
    let mut span: HashSet<GroupElement> = HashSet::from([g.identity()]);
    for (x, &o) in elements.iter().zip(orders) {
        if span.len() as u64 == target {
            break;
        }
        if o == 1 || p_part(o, p) != o || span.contains(x) {
            continue;
        }
        gens.push(x.clone());
        match g.closure(&gens, target as usize) {
            Ok(c) if p_part(c.len() as u64, p) == c.len() as u64 => {
                span = c.into_iter().collect();
            }
            Ok(_) | Err(Error::Capacity { .. }) => {
                gens.pop();
            }
            Err(e) => return Err(e),
        }
    }
    g.subgroup_generated(format!("Syl{p}({})", g.name()), &gens)
}

fn complement_sylow_check(c: &Arc<Group>) -> Result<Check> {
    let mut ok = true;
    let mut notes = Vec::new();
    for p in prime_factors(c.order()?) {
        let s = sylow_subgroup(c, p)?;
        let n = s.order()?;
        let cyclic = s.is_cyclic()?;
        if cyclic {
            notes.push(format!("p={p}: cyclic of order {n}"));
        } else if p == 2 {
            let involutions = s.element_orders()?.iter().filter(|&&o| o == 2).count();
            if involutions == 1 {
                notes.push(format!("p=2: generalized quaternion of order {n}"));
            } else {
                ok = false;
                notes.push(format!("p=2: order {n}, {involutions} involutions"));
            }
        } else {
            ok = false;
            notes.push(format!("p={p}: non-cyclic of order {n}"));
        }
    }
    if notes.is_empty() {
        notes.push("trivial complement".into());
    }
    Ok(Check::new(
        "complement Sylow subgroups",
        ok,
        notes.join("; "),
    ))
}

/// A subgroup of `g` of order `|G|/|N|` meeting `N` trivially: cyclic
/// candidates first, then a greedy Hall subgroup when the orders are coprime.
pub fn find_complement(g: &Arc<Group>, n: &Group) -> Result<Option<Arc<Group>>> {
    let ng = g.order()?;
    let nn = n.order()?;
    if nn == 0 || ng % nn != 0 {
        return Ok(None);
    }
    let target = ng / nn;
    let id = g.identity();
    let name = format!("complement of {} in {}", n.name(), g.name());
    if target == 1 {
        return Ok(Some(g.subgroup_generated(name, &[])?));
    }
    let elements = g.elements()?;
    let orders = g.element_orders()?;

    for (x, &o) in elements.iter().zip(orders) {
        if o != target || n.contains(x)? {
            continue;
        }
        let mut y = x.clone();
        let mut meets = false;
        while y != id {
            if n.contains(&y)? {
                meets = true;
                break;
            }
            y = g.mul(&y, x);
        }
        if !meets {
            return Ok(Some(g.subgroup_generated(name, std::slice::from_ref(x))?));
        }
    }

    if gcd(nn, target) != 1 {
        return Ok(None);
    }
    let mut gens: Vec<GroupElement> = Vec::new();
    let mut span: HashSet<GroupElement> = HashSet::from([id]);
    for (x, &o) in elements.iter().zip(orders) {
        if o == 1 || gcd(o, nn) != 1 || span.contains(x) {
            continue;
        }
        gens.push(x.clone());
        match g.closure(&gens, target as usize) {
            Ok(c) if target % c.len() as u64 == 0 => span = c.into_iter().collect(),
            Ok(_) | Err(Error::Capacity { .. }) => {
                gens.pop();
            }
            Err(e) => return Err(e),
        }
        if span.len() as u64 == target {
            return Ok(Some(g.subgroup_generated(name, &gens)?));
        }
    }
    Ok(None)
}

/// Checks `1 < H < K < G` with `H, K` normal, `K` Frobenius with kernel
/// `H`, and `G/H` Frobenius with kernel `K/H`; then checks the prime sets
/// `π(H) ⊆ {2,5}`, `π(K/H) = {3}`, `π(G/K) = {2}`.
pub fn verify_2frobenius(
    g: &Arc<Group>,
    h: &Arc<Group>,
    k: &Arc<Group>,
) -> Result<VerificationReport> {
    ensure_within(g, h)?;
    ensure_within(g, k)?;
    let mut report = VerificationReport::new(format!(
        "{} with series 1 < {} < {} < G",
        g.name(),
        h.name(),
        k.name()
    ));
    let (ng, nh, nk) = (g.order()?, h.order()?, k.order()?);

    let mut h_in_k = true;
    for x in h.generators()? {
        h_in_k &= k.contains(x)?;
    }
    let proper = nh > 1 && nk > nh && ng > nk && h_in_k;
    report.push(Check::new(
        "series 1 < H < K < G",
        proper,
        format!("|H| = {nh}, |K| = {nk}, |G| = {ng}, H ⊆ K: {h_in_k}"),
    ));
    let h_normal = normality_check("H normal in G", g, h)?;
    let k_normal = normality_check("K normal in G", g, k)?;
    let normal = h_normal.status == Status::Pass && k_normal.status == Status::Pass;
    report.push(h_normal);
    report.push(k_normal);

    if !(proper && normal) {
        report.push(Check::skipped(
            "Frobenius layers",
            "series is not a normal series",
        ));
        return Ok(report);
    }

    match find_complement(k, h)? {
        Some(c) => {
            let inner = verify_frobenius(
                k,
                &FrobeniusWitness {
                    kernel: h.clone(),
                    complement: c,
                },
            )?;
            report.absorb("K = H ⋊ C", inner);
        }
        None => report.push(Check::new(
            "K = H ⋊ C",
            false,
            "no complement to H in K found",
        )),
    }

    let quotient = g.quotient(h)?;
    let reps: Vec<GroupElement> = k
        .generators()?
        .iter()
        .filter_map(|x| quotient.coset_of(x))
        .collect();
    let k_bar = quotient.subgroup_generated("K/H", &reps)?;
    match find_complement(&quotient, &k_bar)? {
        Some(c) => {
            let outer = verify_frobenius(
                &quotient,
                &FrobeniusWitness {
                    kernel: k_bar.clone(),
                    complement: c,
                },
            )?;
            report.absorb("G/H = (K/H) ⋊ C", outer);
        }
        None => report.push(Check::new(
            "G/H = (K/H) ⋊ C",
            false,
            "no complement to K/H in G/H found",
        )),
    }

    let (pi_h, pi_kh, pi_gk) = (primes_of(nh), primes_of(nk / nh), primes_of(ng / nk));
    let ok = pi_h.is_subset(&BTreeSet::from([2, 5]))
        && pi_kh == BTreeSet::from([3])
        && pi_gk == BTreeSet::from([2]);
    report.push(Check::new(
        "prime sets of the 2-Frobenius case",
        ok,
        format!(
            "π(H) = {}, π(K/H) = {}, π(G/K) = {}; |H| = {nh}, |K/H| = {}, |G/K| = {}",
            fmt_set(&pi_h),
            fmt_set(&pi_kh),
            fmt_set(&pi_gk),
            nk / nh,
            ng / nk
        ),
    ));
    Ok(report)
}

/// For each connected component `π_i` of Γ(G), tries the set of elements
/// whose order involves only primes of `π_i` as a Frobenius kernel.
/// Every returned witness has passed [`verify_frobenius`].
pub fn find_frobenius_structure(g: &Arc<Group>) -> Result<Option<FrobeniusWitness>> {
    let graph = prime_graph(&spectrum(g)?);
    let parts = components(&graph);
    if parts.len() < 2 {
        return Err(Error::Precondition(format!(
            "Γ({}) is connected; a Frobenius group has a disconnected prime graph",
            g.name()
        )));
    }
    let ng = g.order()?;
    let elements = g.elements()?;
    let orders = g.element_orders()?;
    for part in parts {
        let set: Vec<&GroupElement> = elements
            .iter()
            .zip(orders)
            .filter(|(_, &o)| prime_factors(o).iter().all(|p| part.contains(p)))
            .map(|(x, _)| x)
            .collect();
        if ng % set.len() as u64 != 0 || !g.set_is_closed(&set)? {
            continue;
        }
        let gens: Vec<GroupElement> = set.iter().map(|x| (*x).clone()).collect();
        let kernel = g.subgroup_generated(format!("S{}", fmt_set(&part)), &gens)?;
        if !g.is_normal(&kernel)? {
            continue;
        }
        let Some(complement) = find_complement(g, &kernel)? else {
            continue;
        };
        let witness = FrobeniusWitness { kernel, complement };
        if verify_frobenius(g, &witness)?.passed() {
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// Conjugacy class representatives, least element of each class first seen
/// in enumeration order.
fn class_representatives(g: &Group) -> Result<Vec<GroupElement>> {
    let gens = g.generators()?;
    let mut seen: HashSet<GroupElement> = HashSet::new();
    let mut reps = Vec::new();
    for x in g.elements()? {
        if seen.contains(x) {
            continue;
        }
        reps.push(x.clone());
        let mut stack = vec![x.clone()];
        seen.insert(x.clone());
        while let Some(y) = stack.pop() {
            for s in gens {
                let z = g.conjugate(s, &y);
                if seen.insert(z.clone()) {
                    stack.push(z);
                }
            }
        }
    }
    Ok(reps)
}

/// Generators of the smallest normal subgroup containing `seeds`.
fn normal_closure_generators(g: &Group, seeds: &[GroupElement]) -> Result<Vec<GroupElement>> {
    let mut gens: Vec<GroupElement> = seeds.to_vec();
    let gg = g.generators()?;
    loop {
        let span: HashSet<GroupElement> = g.closure(&gens, g.cap())?.into_iter().collect();
        let extra: Vec<GroupElement> = gg
            .iter()
            .flat_map(|s| gens.iter().map(move |x| (s, x)))
            .map(|(s, x)| g.conjugate(s, x))
            .filter(|z| !span.contains(z))
            .collect();
        let Some(z) = extra.into_iter().next() else {
            return Ok(gens);
        };
        gens.push(z);
    }
}

/// Normal subgroups reachable as normal closures of single conjugacy
/// classes and their joins, ascending by order.
pub fn normal_subgroups(g: &Arc<Group>) -> Result<Vec<Arc<Group>>> {
    let index: HashMap<&GroupElement, usize> = g
        .elements()?
        .iter()
        .enumerate()
        .map(|(i, x)| (x, i))
        .collect();
    let key = |gens: &[GroupElement]| -> Result<Vec<usize>> {
        let mut v: Vec<usize> = g.closure(gens, g.cap())?.iter().map(|x| index[x]).collect();
        v.sort_unstable();
        Ok(v)
    };
    let mut found: Vec<(Vec<usize>, Vec<GroupElement>)> = Vec::new();
    let mut keys: HashSet<Vec<usize>> = HashSet::new();
    for x in class_representatives(g)? {
        let gens = normal_closure_generators(g, &[x])?;
        let k = key(&gens)?;
        if keys.insert(k.clone()) {
            found.push((k, gens));
        }
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let mut gens = found[i].1.clone();
            gens.extend(found[j].1.iter().cloned());
            let k = key(&gens)?;
            if keys.insert(k.clone()) {
                found.push((k, gens));
            }
        }
        i += 1;
    }
    found.sort_by_key(|(k, _)| k.len());
    found
        .into_iter()
        .map(|(k, gens)| g.subgroup_generated(format!("N{}", k.len()), &gens))
        .collect()
}

/// Searches pairs of normal subgroups `H < K` for a verified 2-Frobenius
/// series.
pub fn find_2frobenius_structure(g: &Arc<Group>) -> Result<Option<(Arc<Group>, Arc<Group>)>> {
    let ng = g.order()?;
    let normals = normal_subgroups(g)?;
    for h in &normals {
        let nh = h.order()?;
        if nh == 1 || nh == ng {
            continue;
        }
        for k in &normals {
            let nk = k.order()?;
            if nk <= nh || nk == ng || nk % nh != 0 {
                continue;
            }
            // Frobenius kernels and complements have coprime orders.
            if gcd(nh, nk / nh) != 1 || gcd(nk / nh, ng / nk) != 1 {
                continue;
            }
            if h.generators()?
                .iter()
                .any(|x| !matches!(k.contains(x), Ok(true)))
            {
                continue;
            }
            if verify_2frobenius(g, h, k)?.passed() {
                return Ok(Some((h.clone(), k.clone())));
            }
        }
    }
    Ok(None)
}

/// The natural Frobenius witness of a semidirect product: its own factors.
pub fn natural_witness(g: &Arc<Group>) -> Result<Option<FrobeniusWitness>> {
    let Some((k, c)) = g.factors() else {
        return Ok(None);
    };
    let kgens: Vec<GroupElement> = k
        .generators()?
        .iter()
        .filter_map(|x| g.embed_kernel(x))
        .collect();
    let cgens: Vec<GroupElement> = c
        .generators()?
        .iter()
        .filter_map(|x| g.embed_complement(x))
        .collect();
    Ok(Some(FrobeniusWitness {
        kernel: g.subgroup_generated(k.name().to_string(), &kgens)?,
        complement: g.subgroup_generated(c.name().to_string(), &cgens)?,
    }))
}

/// For `V ⋊ (A ⋊ B)`, the series `1 < V < V ⋊ A < G`.
pub fn natural_series(g: &Arc<Group>) -> Result<Option<(Arc<Group>, Arc<Group>)>> {
    let Some((v, top)) = g.factors() else {
        return Ok(None);
    };
    let Some((a, _)) = top.factors() else {
        return Ok(None);
    };
    let hgens: Vec<GroupElement> = v
        .generators()?
        .iter()
        .filter_map(|x| g.embed_kernel(x))
        .collect();
    let mut kgens = hgens.clone();
    for x in a.generators()? {
        let t = top.embed_kernel(x).expect("top is semidirect");
        kgens.push(g.embed_complement(&t).expect("g is semidirect"));
    }
    Ok(Some((
        g.subgroup_generated(v.name().to_string(), &hgens)?,
        g.subgroup_generated(format!("{} ⋊ {}", v.name(), a.name()), &kgens)?,
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremCase {
    Case1,
    Case2,
    Case3,
    Case4,
    NoMatch,
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremCase::Case1 => "Case1",
            TheoremCase::Case2 => "Case2",
            TheoremCase::Case3 => "Case3",
            TheoremCase::Case4 => "Case4",
            TheoremCase::NoMatch => "NoMatch",
        };
        f.write_str(s)
    }
}

/// Γ(PGL(2,9)), computed once by enumeration.
pub fn reference_graph() -> &'static PrimeGraph {
    static GRAPH: OnceLock<PrimeGraph> = OnceLock::new();
    GRAPH.get_or_init(|| {
        let g = constructions::pgl2(9).expect("PGL(2,9) is constructible");
        prime_graph(&spectrum(&g).expect("PGL(2,9) is enumerable"))
    })
}

/// The case of the classification a group falls under, with the report
/// that justifies it.
pub fn classify(g: &Arc<Group>) -> Result<(TheoremCase, VerificationReport)> {
    let mut report = VerificationReport::new(format!("{} against Γ(PGL(2,9))", g.name()));
    let s = spectrum(g)?;
    let graph = prime_graph(&s);
    let same = graphs_equal(&graph, reference_graph());
    report.push(Check::new(
        "prime graph equals Γ(PGL(2,9))",
        same,
        format!(
            "vertices {}, edges {:?}",
            fmt_set(graph.vertices()),
            graph
                .edges()
                .iter()
                .map(|&(p, q)| [p, q])
                .collect::<Vec<_>>()
        ),
    ));
    if !same {
        return Ok((TheoremCase::NoMatch, report));
    }

    if let Some(w) = find_frobenius_structure(g)? {
        let pk = primes_of(w.kernel.order()?);
        let pc = primes_of(w.complement.order()?);
        let frob = verify_frobenius(g, &w)?;
        if pk == BTreeSet::from([3]) && pc == BTreeSet::from([2, 5]) && w.kernel.is_abelian()? {
            report.absorb("Frobenius", frob);
            report.push(Check::new(
                "case 1: abelian 3-group kernel, π(C) = {2,5}",
                true,
                format!(
                    "|K| = {}, |C| = {}",
                    w.kernel.order()?,
                    w.complement.order()?
                ),
            ));
            return Ok((TheoremCase::Case1, report));
        }
        if pk == BTreeSet::from([2, 5]) && pc == BTreeSet::from([3]) && w.complement.is_cyclic()? {
            report.absorb("Frobenius", frob);
            report.push(Check::new(
                "case 2: π(K) = {2,5}, cyclic 3-group complement",
                true,
                format!(
                    "|K| = {}, |C| = {}",
                    w.kernel.order()?,
                    w.complement.order()?
                ),
            ));
            return Ok((TheoremCase::Case2, report));
        }
    }

    if let Some((h, k)) = find_2frobenius_structure(g)? {
        report.absorb("2-Frobenius", verify_2frobenius(g, &h, &k)?);
        return Ok((TheoremCase::Case3, report));
    }

    let m = mu(&s);
    if s.source_order() == 720 && m.maxima() == &BTreeSet::from([3, 8, 10]) {
        report.push(Check::new(
            "case 4: spectral identification with PGL(2,9)",
            true,
            format!("|G| = 720, μ(G) = {}", fmt_set(m.maxima())),
        ));
        return Ok((TheoremCase::Case4, report));
    }
    report.push(Check::new(
        "case match",
        false,
        "graph matches but no Frobenius, 2-Frobenius or spectral identification found",
    ));
    Ok((TheoremCase::NoMatch, report))
}

pub fn theorem_case(g: &Arc<Group>) -> Result<TheoremCase> {
    Ok(classify(g)?.0)
}
