//! Enumeration caps.
//!
//! Every operation in the engine may enumerate all elements, all pairs,
//! or all subsets of generators, so explicit caps keep worst cases under
//! control. The defaults suit desk-scale runs; `GALOIS_CAP` overrides the
//! element/point caps from the environment.

/// Caps applied by enumerating operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group/monoid order accepted by element-wise enumeration.
    pub group_size: usize,
    /// Largest point set for actions and fibers.
    pub points: usize,
    /// Largest number of objects a materialized category may hold.
    pub objects: usize,
    /// Largest number of arrows a materialized category may hold.
    pub arrows: usize,
    /// Largest sheet count for graph covers.
    pub sheets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group_size: 64,
            points: 64,
            objects: 120,
            arrows: 20_000,
            sheets: 6,
        }
    }
}

impl Caps {
    /// Default caps, with `GALOIS_CAP=<n>` (when set and parseable)
    /// overriding the group-order and point caps.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Ok(v) = std::env::var("GALOIS_CAP") {
            if let Ok(n) = v.trim().parse::<usize>() {
                if n > 0 {
                    caps.group_size = n;
                    caps.points = n;
                }
            }
        }
        caps
    }

    pub fn check_group_size(&self, size: usize) -> crate::error::Result<()> {
        if size > self.group_size {
            Err(crate::error::Error::SizeCapExceeded {
                size,
                cap: self.group_size,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_points(&self, n: usize) -> crate::error::Result<()> {
        if n > self.points {
            Err(crate::error::Error::SizeCapExceeded {
                size: n,
                cap: self.points,
            })
        } else {
            Ok(())
        }
    }
}
