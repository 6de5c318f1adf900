use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::EvolverError;
use crate::fuzzy::{RuleBase, OUTPUT_LEVELS};

/// Largest gene value; genes range over `1..=MAX_GENE`.
pub const MAX_GENE: u8 = OUTPUT_LEVELS as u8;

/// Rule consequent levels in rule-grid order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Chromosome {
    genes: Vec<u8>,
}

impl Chromosome {
    pub fn new(genes: Vec<u8>) -> Result<Self, EvolverError> {
        if genes.is_empty() {
            return Err(EvolverError::InvalidChromosome("no genes".into()));
        }
        if let Some(g) = genes.iter().find(|&&g| !(1..=MAX_GENE).contains(&g)) {
            return Err(EvolverError::InvalidChromosome(format!(
                "gene {g} outside 1..={MAX_GENE}"
            )));
        }
        Ok(Self { genes })
    }

    pub fn from_rule_base(rb: &RuleBase) -> Self {
        Self {
            genes: rb.consequents().to_vec(),
        }
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        Self {
            genes: (0..len).map(|_| rng.gen_range(1..=MAX_GENE)).collect(),
        }
    }

    pub fn genes(&self) -> &[u8] {
        &self.genes
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        !self.genes.is_empty() && self.genes.iter().all(|g| (1..=MAX_GENE).contains(g))
    }

    pub(crate) fn genes_mut(&mut self) -> &mut [u8] {
        &mut self.genes
    }
}

impl TryFrom<Vec<u8>> for Chromosome {
    type Error = EvolverError;

    fn try_from(genes: Vec<u8>) -> Result<Self, Self::Error> {
        Self::new(genes)
    }
}

impl From<Chromosome> for Vec<u8> {
    fn from(c: Chromosome) -> Self {
        c.genes
    }
}

impl fmt::Display for Chromosome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, g) in self.genes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("]")
    }
}
