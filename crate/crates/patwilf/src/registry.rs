use std::collections::BTreeMap;
use std::sync::RwLock;

use patwilf_core::stats::{CombinerFn, DEFAULT_DAGGER_BOUND};
use patwilf_core::Statistic;

use crate::Error;

/// Named statistics available to the engines. Append-only: a name, once
/// registered, is never replaced.
///
/// New statistics are checked for additivity up to the registry bound
/// before they are accepted. `maj` ships pre-registered but unverified so
/// that it can be evaluated; the recursion refuses it.
#[derive(Debug)]
pub struct StatRegistry {
    stats: RwLock<BTreeMap<String, Statistic>>,
    bound: usize,
}

impl Default for StatRegistry {
    fn default() -> Self {
        Self::with_bound(DEFAULT_DAGGER_BOUND)
    }
}

impl StatRegistry {
    pub fn with_bound(bound: usize) -> Self {
        let stats = [
            Statistic::inv(),
            Statistic::des(),
            Statistic::c213(),
            Statistic::maj(),
        ]
        .into_iter()
        .map(|s| (s.name().to_string(), s))
        .collect();
        Self {
            stats: RwLock::new(stats),
            bound,
        }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Verifies additivity up to the bound, then adds the statistic.
    pub fn register(&self, stat: Statistic) -> Result<(), Error> {
        let name = stat.name().to_string();
        if self.stats.read().unwrap().contains_key(&name) {
            return Err(Error::Duplicate(name));
        }
        let verified = stat
            .verified(self.bound)
            .map_err(|violation| Error::NotAdditive {
                name: name.clone(),
                violation,
            })?;
        let mut stats = self.stats.write().unwrap();
        if stats.contains_key(&name) {
            return Err(Error::Duplicate(name));
        }
        stats.insert(name, verified);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<Statistic, Error> {
        self.stats
            .read()
            .unwrap()
            .get(name)
            .cloned()
            .ok_or_else(|| patwilf_core::Error::UnknownStatistic(name.to_string()).into())
    }

    pub fn combiner_of(&self, name: &str) -> Result<CombinerFn, Error> {
        Ok(self.get(name)?.combiner())
    }

    pub fn names(&self) -> Vec<String> {
        self.stats.read().unwrap().keys().cloned().collect()
    }
}
