//! Named pass/fail checks with the first violating index.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// First violating basis index tuple (0-based), if any.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn push(&mut self, name: &'static str, witness: Option<Vec<usize>>) {
        self.checks.push(Check {
            name,
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }
}

/// First tuple yielded by `indices` for which `holds` is false.
pub(crate) fn first_violation<I>(
    indices: I,
    mut holds: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>>
where
    I: IntoIterator<Item = Vec<usize>>,
{
    indices.into_iter().find(|idx| !holds(idx))
}

/// All tuples in `0..dim` of the given arity, lexicographically.
pub(crate) fn tuples(dim: usize, arity: u32) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(arity);
    (0..total).map(move |mut t| {
        let mut idx = vec![0; arity as usize];
        for slot in idx.iter_mut().rev() {
            *slot = t % dim;
            t /= dim;
        }
        idx
    })
}
