use crate::error::Error;

/// A CNF formula over variables `1..=num_vars`; literals are signed variable ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
    pub positive_only: bool,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self, Error> {
        for clause in &clauses {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::InvalidInput(format!("literal {lit} out of range")));
                }
            }
        }
        let positive_only = clauses.iter().flatten().all(|&l| l > 0);
        Ok(CnfFormula {
            num_vars,
            clauses,
            positive_only,
        })
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| literal_value(l, assignment)))
    }

    /// Exactly one true literal per clause.
    pub fn one_in_three_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().filter(|&&l| literal_value(l, assignment)).count() == 1)
    }
}

pub(crate) fn literal_value(lit: i32, assignment: &[bool]) -> bool {
    let value = assignment[lit.unsigned_abs() as usize - 1];
    if lit > 0 {
        value
    } else {
        !value
    }
}
