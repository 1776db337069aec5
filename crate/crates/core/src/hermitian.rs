//! Hermitian Young projectors, built recursively by sandwiching the
//! conventional operator between copies of the parent projector:
//!
//! `P_T = (P_{T'} ⊗ 1) Y_T (P_{T'} ⊗ 1)` for `n ≥ 3`, `P_T = Y_T` for
//! `n = 2` and `P_T = e` for the single box.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::{young_operator, AlgebraElement};
use crate::tableaux::YoungTableau;
use crate::{Error, Result};

/// Memo of projectors along construction histories. Concurrent readers are
/// fine; a racing insert stores a value equal to the one already present.
#[derive(Default)]
pub struct ProjectorCache {
    entries: RwLock<HashMap<YoungTableau, Arc<AlgebraElement>>>,
}

impl ProjectorCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by [`hermitian_young`].
    pub fn global() -> &'static ProjectorCache {
        static CACHE: OnceLock<ProjectorCache> = OnceLock::new();
        CACHE.get_or_init(ProjectorCache::new)
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, t: &YoungTableau) -> Result<Arc<AlgebraElement>> {
        if !t.is_standard() {
            return Err(Error::NonStandard(t.to_string()));
        }
        if let Some(hit) = self.entries.read().unwrap().get(t) {
            return Ok(Arc::clone(hit));
        }
        let value = Arc::new(self.build(t)?);
        let mut entries = self.entries.write().unwrap();
        Ok(Arc::clone(entries.entry(t.clone()).or_insert(value)))
    }

    fn build(&self, t: &YoungTableau) -> Result<AlgebraElement> {
        let n = t.n();
        match n {
            1 => Ok(AlgebraElement::identity(1)),
            2 => young_operator(t),
            _ => {
                let parent = self.get(&t.parent()?.tableau)?.embed(n);
                Ok(&(&parent * &young_operator(t)?) * &parent)
            }
        }
    }
}

/// Hermitian Young projector `P_T` of a standard tableau, memoized in the
/// process-wide cache.
pub fn hermitian_young(t: &YoungTableau) -> Result<Arc<AlgebraElement>> {
    ProjectorCache::global().get(t)
}

/// `(P_S ⊗ 1^{⊗(n−m)}) Y_T (P_S ⊗ 1^{⊗(n−m)})` for an ancestor `S` of `T`
/// with `m` boxes; with `S = T'` this is the defining recursion.
pub fn sandwich_with_ancestor(t: &YoungTableau, ancestor: &YoungTableau) -> Result<AlgebraElement> {
    let history = t.history()?;
    if !history.contains(ancestor) {
        return Err(Error::InvalidTableau(format!(
            "{ancestor} is not in the construction history of {t}"
        )));
    }
    let outer = hermitian_young(ancestor)?.embed(t.n());
    Ok(&(&outer * &young_operator(t)?) * &outer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_syt;

    fn t(s: &str) -> YoungTableau {
        s.parse().unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(*hermitian_young(&t("1")).unwrap(), AlgebraElement::identity(1));
        for tab in enumerate_syt(2).unwrap() {
            assert_eq!(*hermitian_young(&tab).unwrap(), young_operator(&tab).unwrap());
        }
    }

    #[test]
    fn three_box_sum_identity() {
        let p = |s| hermitian_young(&t(s)).unwrap();
        let y = |s| young_operator(&t(s)).unwrap();
        assert_eq!(&*p("12/3") + &*p("13/2"), &y("12/3") + &y("13/2"));
        assert_ne!(*p("12/3"), y("12/3"));
    }

    #[test]
    fn hermitian_on_four_boxes() {
        for tab in enumerate_syt(4).unwrap() {
            let p = hermitian_young(&tab).unwrap();
            assert_eq!(p.involution(), *p, "{tab}");
            assert!(p.is_idempotent(), "{tab}");
        }
    }

    #[test]
    fn local_cache_matches_global() {
        let cache = ProjectorCache::new();
        let tab = t("135/24");
        assert_eq!(cache.get(&tab).unwrap(), hermitian_young(&tab).unwrap());
        assert_eq!(cache.len(), 4);
    }

    #[test]
    fn concurrent_inserts_agree() {
        let cache = ProjectorCache::new();
        let tab = t("124/35");
        let values: Vec<_> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..4).map(|_| s.spawn(|| cache.get(&tab).unwrap())).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(values.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn rejects_non_standard() {
        assert!(matches!(hermitian_young(&t("21")), Err(Error::NonStandard(_))));
        assert!(sandwich_with_ancestor(&t("123/45"), &t("1/2")).is_err());
    }
}
