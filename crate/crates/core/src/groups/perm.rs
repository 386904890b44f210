use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}` stored as its image list.
///
/// Products compose left to right: in `a * b`, `a` is applied first.
/// Display and [`Permutation::from_cycles`] use 1-based points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::Input(format!("image {} out of range", i + 1)))?;
            if *slot {
                return Err(Error::Input(format!("point {} hit twice", i + 1)));
            }
            *slot = true;
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from disjoint cycles of 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &point) in cycle.iter().enumerate() {
                if point == 0 || point as usize > degree {
                    return Err(Error::Input(format!("point {point} outside 1..={degree}")));
                }
                if std::mem::replace(&mut used[point as usize - 1], true) {
                    return Err(Error::Input(format!("point {point} repeated in cycles")));
                }
                let next = cycle[(i + 1) % cycle.len()];
                images[point as usize - 1] = next - 1;
            }
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.0[point as usize]
    }

    pub fn compose(&self, then: &Self) -> Self {
        Permutation(self.0.iter().map(|&i| then.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            out[j as usize] = i as u32;
        }
        Permutation(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Nontrivial cycles, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32 + 1);
                i = self.0[i] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let points: Vec<String> = cycle.iter().map(u32::to_string).collect();
            write!(f, "({})", points.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Permutation::from_cycles(5, &[vec![1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4 5)");
        assert_eq!(Permutation::from_cycles(5, &p.cycles()).unwrap(), p);
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn composition_applies_left_factor_first() {
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.compose(&b).apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_invalid_cycles() {
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0]]).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
