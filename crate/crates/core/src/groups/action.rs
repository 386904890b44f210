use std::sync::Arc;

use rayon::prelude::*;

use super::{Group, GroupElement};
use crate::error::{Error, Result};

/// A left action of `complement` on `kernel`, tabulated in full: for every
/// complement element, the image of every kernel element.
pub struct ActionTable {
    kernel: Arc<Group>,
    complement: Arc<Group>,
    kernel_len: usize,
    /// `maps[c * kernel_len + k]` is the index of `act(c)(k)`.
    maps: Vec<u32>,
}

impl std::fmt::Debug for ActionTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ActionTable")
            .field("kernel", &self.kernel.name())
            .field("complement", &self.complement.name())
            .finish()
    }
}

impl ActionTable {
    /// Tabulates `act(c)(k)`. Images outside the kernel are rejected here;
    /// the automorphism and homomorphism laws are checked by
    /// [`ActionTable::validate`].
    pub fn from_fn<F>(kernel: Arc<Group>, complement: Arc<Group>, act: F) -> Result<Self>
    where
        F: Fn(&GroupElement, &GroupElement) -> GroupElement + Sync,
    {
        let ks = kernel.elements()?;
        let cs = complement.elements()?;
        let rows: Result<Vec<Vec<u32>>> = cs
            .par_iter()
            .map(|c| {
                ks.iter()
                    .map(|k| {
                        let image = act(c, k);
                        kernel.index_of(&image)?.map(|i| i as u32).ok_or_else(|| {
                            Error::Construction(format!(
                                "act({c})({k}) = {image} lies outside {}",
                                kernel.name()
                            ))
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(ActionTable {
            kernel_len: ks.len(),
            maps: rows?.concat(),
            kernel,
            complement,
        })
    }

    pub fn kernel(&self) -> &Arc<Group> {
        &self.kernel
    }

    pub fn complement(&self) -> &Arc<Group> {
        &self.complement
    }

    fn image(&self, c: usize, k: usize) -> usize {
        self.maps[c * self.kernel_len + k] as usize
    }

    fn index(group: &Group, g: &GroupElement) -> usize {
        group
            .index_of(g)
            .expect("action groups are enumerated on construction")
            .unwrap_or_else(|| panic!("{g} is not in {}", group.name()))
    }

    /// `act(c)(k)`.
    pub fn apply(&self, c: &GroupElement, k: &GroupElement) -> GroupElement {
        let ci = Self::index(&self.complement, c);
        let ki = Self::index(&self.kernel, k);
        self.kernel.elements().expect("enumerated")[self.image(ci, ki)].clone()
    }

    /// Checks that `act(1)` is the identity map, that each `act(g)` for a
    /// complement generator `g` is an automorphism, and that
    /// `act(c·g) = act(c)∘act(g)` for every `c` and every generator `g`.
    /// Together these make `c -> act(c)` a homomorphism into `Aut(kernel)`.
    pub fn validate(&self) -> Result<()> {
        let ks = self.kernel.elements()?;
        let cs = self.complement.elements()?;
        let n = self.kernel_len;

        let id = Self::index(&self.complement, &self.complement.identity());
        if let Some(k) = (0..n).find(|&k| self.image(id, k) != k) {
            return Err(Error::Construction(format!(
                "act(1) moves {} to {}",
                ks[k],
                ks[self.image(id, k)]
            )));
        }

        let kernel_gens = self.kernel.generators()?;
        for g in self.complement.generators()? {
            let gi = Self::index(&self.complement, g);
            let mut hit = vec![false; n];
            for k in 0..n {
                let slot = &mut hit[self.image(gi, k)];
                if *slot {
                    return Err(Error::Construction(format!(
                        "act({g}) is not injective: two elements map to {}",
                        ks[self.image(gi, k)]
                    )));
                }
                *slot = true;
            }
            for (k, x) in ks.iter().enumerate() {
                for s in kernel_gens {
                    let si = Self::index(&self.kernel, s);
                    let lhs = self.image(gi, Self::index(&self.kernel, &self.kernel.mul(x, s)));
                    let rhs = Self::index(
                        &self.kernel,
                        &self
                            .kernel
                            .mul(&ks[self.image(gi, k)], &ks[self.image(gi, si)]),
                    );
                    if lhs != rhs {
                        return Err(Error::Construction(format!(
                            "act({g}) is not a homomorphism: act({g})({x}·{s}) = {} but act({g})({x})·act({g})({s}) = {}",
                            ks[lhs], ks[rhs]
                        )));
                    }
                }
            }
        }

        let gens: Vec<(usize, &GroupElement)> = self
            .complement
            .generators()?
            .iter()
            .map(|g| (Self::index(&self.complement, g), g))
            .collect();
        let violation = cs.par_iter().enumerate().find_map_first(|(ci, c)| {
            for &(gi, g) in &gens {
                let cg = Self::index(&self.complement, &self.complement.mul(c, g));
                if let Some(k) =
                    (0..n).find(|&k| self.image(cg, k) != self.image(ci, self.image(gi, k)))
                {
                    return Some(format!(
                        "act({c}·{g})({}) = {} but act({c})(act({g})({})) = {}",
                        ks[k],
                        ks[self.image(cg, k)],
                        ks[k],
                        ks[self.image(ci, self.image(gi, k))]
                    ));
                }
            }
            None
        });
        match violation {
            Some(msg) => Err(Error::Construction(format!(
                "action is not a homomorphism: {msg}"
            ))),
            None => Ok(()),
        }
    }

    /// The least pair `(c, k)` in enumeration order with `c ≠ 1`, `k ≠ 1`
    /// and `act(c)(k) = k`, if any.
    pub fn fixed_point(&self) -> Option<(GroupElement, GroupElement)> {
        let ks = self.kernel.elements().expect("enumerated");
        let cs = self.complement.elements().expect("enumerated");
        let kid = Self::index(&self.kernel, &self.kernel.identity());
        let cid = Self::index(&self.complement, &self.complement.identity());
        (0..cs.len())
            .into_par_iter()
            .filter(|&c| c != cid)
            .find_map_first(|c| {
                (0..ks.len())
                    .find(|&k| k != kid && self.image(c, k) == k)
                    .map(|k| (cs[c].clone(), ks[k].clone()))
            })
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.fixed_point().is_none()
    }
}

/// Whether no non-identity element of `complement` fixes a non-identity
/// element of `kernel`. The groups must be the ones the table was built on.
pub fn is_fixed_point_free(kernel: &Group, complement: &Group, act: &ActionTable) -> Result<bool> {
    if !std::ptr::eq(kernel, act.kernel().as_ref())
        || !std::ptr::eq(complement, act.complement().as_ref())
    {
        return Err(Error::Input(
            "action table belongs to different groups".into(),
        ));
    }
    Ok(act.is_fixed_point_free())
}
