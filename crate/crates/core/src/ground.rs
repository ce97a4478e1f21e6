use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

/// An ordered list of distinct element labels.
#[derive(Clone, Debug)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyGround);
        }
        Self::with_labels(labels)
    }

    /// Like [`GroundSet::new`] but allows the empty set, which only arises
    /// as the vertex set of derived complexes.
    pub(crate) fn with_labels(labels: Vec<String>) -> Result<Self> {
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Ground set labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels
            .into_iter()
            .try_fold(Subset::EMPTY, |acc, l| Ok(acc.with(self.index_of(l.as_ref())?)))
    }

    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// The ground set restricted to `mask`, in the same relative order.
    pub fn restrict(&self, mask: Subset) -> GroundSet {
        let labels = mask.iter().map(|i| self.labels[i].clone()).collect();
        GroundSet::with_labels(labels).expect("restriction of a valid ground set")
    }

    pub(crate) fn check_subset(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.full()) {
            Ok(())
        } else {
            let bad = s.difference(self.full()).first().unwrap_or(0);
            Err(Error::UnknownLabel(format!("#{bad}")))
        }
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for GroundSet {}
