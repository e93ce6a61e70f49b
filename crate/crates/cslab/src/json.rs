//! File formats. Every element of a finite abelian group travels as its
//! coordinate array; every structure as row-major tables over element indices.

use std::path::Path;

use cslab_core::abelian::FinAbGroup;
use cslab_core::cohomology::Cochain2;
use cslab_core::dynamical::{DynamicalMap, DynamicalPair};
use cslab_core::extension::CentralExtension;
use cslab_core::structures::{BiGroupoid, Brace, Carrier, CycleSet, LinearCycleSet, Rack, Table};
use cslab_core::Verdict;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub invariant_factors: Vec<i64>,
}

impl GroupFile {
    pub fn from_group(g: &FinAbGroup) -> Self {
        GroupFile { invariant_factors: g.invariant_factors().to_vec() }
    }

    pub fn to_group(&self) -> CliResult<FinAbGroup> {
        Ok(FinAbGroup::new(&self.invariant_factors)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lcs,
    Cycleset,
    Brace,
    Rack,
    Bigroupoid,
}

pub type Rows = Vec<Vec<usize>>;

/// `{"kind": …, "group"?: …, "sum"?: …, "n"?: …, "dot" | "circ" | "star" | "table1"/"table2": …}`
///
/// The additive group comes from `group` when it is a known `⊕ Z/dᵢ`, and from
/// an explicit `sum` table otherwise (for example the total space of an extension).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFile {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sum: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circ: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table1: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table2: Option<Rows>,
}

fn table(rows: &Option<Rows>, name: &str) -> CliResult<Table> {
    let rows = rows.as_ref().ok_or_else(|| CliError::Invalid(format!("missing \"{name}\" table")))?;
    Ok(Table::from_rows(rows)?)
}

fn rows(t: &Table) -> Rows {
    t.rows()
}

impl StructureFile {
    fn empty(kind: Kind) -> Self {
        StructureFile { kind, group: None, sum: None, n: None, dot: None, circ: None, star: None, table1: None, table2: None }
    }

    pub fn from_lcs(x: &LinearCycleSet) -> Self {
        let mut s = StructureFile::empty(Kind::Lcs);
        match x.group() {
            Some(g) => s.group = Some(GroupFile::from_group(g)),
            None => s.sum = Some(rows(x.carrier().sum_table())),
        }
        s.dot = Some(rows(x.table()));
        s
    }

    pub fn from_cycle_set(x: &CycleSet) -> Self {
        let mut s = StructureFile::empty(Kind::Cycleset);
        s.n = Some(x.size());
        s.dot = Some(rows(x.table()));
        s
    }

    fn expect(&self, kind: Kind) -> CliResult<()> {
        if self.kind != kind {
            return Err(CliError::Invalid(format!("expected a {kind:?} structure, found {:?}", self.kind)));
        }
        Ok(())
    }

    /// The additive table, unverified.
    pub fn sum_table(&self) -> CliResult<Table> {
        match (&self.group, &self.sum) {
            (Some(g), None) => {
                let g = g.to_group()?;
                Ok(Table::new(g.order(), g.sum_table())?)
            }
            (None, Some(_)) => table(&self.sum, "sum"),
            _ => Err(CliError::Invalid("give exactly one of \"group\" and \"sum\"".into())),
        }
    }

    pub fn carrier(&self) -> CliResult<Carrier> {
        match &self.group {
            Some(g) => Ok(Carrier::from_group(&g.to_group()?)),
            None => Ok(Carrier::from_table(self.sum_table()?)?),
        }
    }

    pub fn to_lcs(&self) -> CliResult<LinearCycleSet> {
        self.expect(Kind::Lcs)?;
        let carrier = self.carrier()?;
        let dot = table(&self.dot, "dot")?;
        if dot.size() != carrier.size() {
            return Err(CliError::Invalid(format!("dot table has size {}, group has order {}", dot.size(), carrier.size())));
        }
        Ok(LinearCycleSet::new(carrier, dot)?)
    }

    pub fn to_cycle_set(&self) -> CliResult<CycleSet> {
        self.expect(Kind::Cycleset)?;
        let dot = table(&self.dot, "dot")?;
        self.check_n(dot.size())?;
        Ok(CycleSet::new(dot)?)
    }

    fn check_n(&self, size: usize) -> CliResult<()> {
        match self.n {
            Some(n) if n != size => Err(CliError::Invalid(format!("\"n\" is {n} but the table has size {size}"))),
            _ => Ok(()),
        }
    }

    /// Runs the verifier that matches `kind` on the raw tables.
    pub fn verify(&self) -> CliResult<Verdict> {
        use cslab_core::structures::*;
        Ok(match self.kind {
            Kind::Lcs => {
                let (sum, dot) = (self.sum_table()?, table(&self.dot, "dot")?);
                if sum.size() != dot.size() {
                    return Err(CliError::Invalid("sum and dot tables differ in size".into()));
                }
                verify_linear_cycle_set(&sum, &dot)
            }
            Kind::Cycleset => {
                let dot = table(&self.dot, "dot")?;
                self.check_n(dot.size())?;
                verify_cycle_set(&dot)
            }
            Kind::Brace => {
                let (sum, circ) = (self.sum_table()?, table(&self.circ, "circ")?);
                if sum.size() != circ.size() {
                    return Err(CliError::Invalid("sum and circ tables differ in size".into()));
                }
                verify_brace(&sum, &circ)
            }
            Kind::Rack => {
                let star = table(&self.star, "star")?;
                self.check_n(star.size())?;
                verify_rack(&star)
            }
            Kind::Bigroupoid => {
                let (braid, _) = bigroupoid_ybe_equivalence(&self.to_bigroupoid()?)?;
                braid
            }
        })
    }

    pub fn to_brace(&self) -> CliResult<Brace> {
        self.expect(Kind::Brace)?;
        Ok(Brace::new(self.carrier()?, table(&self.circ, "circ")?)?)
    }

    pub fn to_rack(&self) -> CliResult<Rack> {
        self.expect(Kind::Rack)?;
        Ok(Rack::new(table(&self.star, "star")?)?)
    }

    pub fn to_bigroupoid(&self) -> CliResult<BiGroupoid> {
        self.expect(Kind::Bigroupoid)?;
        Ok(BiGroupoid::new(table(&self.table1, "table1")?, table(&self.table2, "table2")?)?)
    }
}

/// `{"f": [[coords, …], …], "g": …}`, each entry a coordinate array of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainFile {
    pub f: Vec<Vec<Vec<i64>>>,
    pub g: Vec<Vec<Vec<i64>>>,
}

impl CochainFile {
    pub fn from_cochain(c: &Cochain2) -> Self {
        let a = c.coefficients();
        let n = c.size();
        let grid = |h: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<Vec<i64>>> {
            (0..n).map(|x| (0..n).map(|y| a.coords(h(x, y))).collect()).collect()
        };
        CochainFile { f: grid(&|x, y| c.f(x, y)), g: grid(&|x, y| c.g(x, y)) }
    }

    pub fn to_cochain(&self, n: usize, a: &FinAbGroup) -> CliResult<Cochain2> {
        let flatten = |grid: &Vec<Vec<Vec<i64>>>, name: &str| -> CliResult<Vec<usize>> {
            if grid.len() != n || grid.iter().any(|row| row.len() != n) {
                return Err(CliError::Invalid(format!("\"{name}\" must be a {n} × {n} table")));
            }
            grid.iter()
                .flatten()
                .map(|coords| element_index(a, coords))
                .collect()
        };
        Ok(Cochain2::new(n, a.clone(), flatten(&self.f, "f")?, flatten(&self.g, "g")?)?)
    }
}

/// Index of a coordinate array; coordinates must already be reduced.
pub fn element_index(a: &FinAbGroup, coords: &[i64]) -> CliResult<usize> {
    if coords.len() != a.rank() || coords.iter().zip(a.invariant_factors()).any(|(&c, &d)| c < 0 || c >= d) {
        return Err(CliError::Invalid(format!("{coords:?} is not an element of Z{:?}", a.invariant_factors())));
    }
    Ok(a.index(coords))
}

pub fn elements(a: &FinAbGroup, indices: &[usize]) -> Vec<Vec<i64>> {
    indices.iter().map(|&v| a.coords(v)).collect()
}

/// `{"alpha": [[[[…]]]], "alpha_prime"?: …, "beta"?: …}` with `alpha[x][y][s][t] = s'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynamicalFile {
    pub alpha: Vec<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_prime: Option<Vec<Vec<Rows>>>,
    /// `beta[s][t][x][y] = x'`; switches to the general bi-groupoid product.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Vec<Rows>>>,
}

impl DynamicalFile {
    pub fn from_pair(pair: &DynamicalPair) -> Self {
        DynamicalFile { alpha: pair.alpha.to_nested(), alpha_prime: Some(pair.alpha_prime.to_nested()), beta: None }
    }

    pub fn alpha(&self) -> CliResult<DynamicalMap> {
        Ok(DynamicalMap::from_nested(&self.alpha)?)
    }

    pub fn pair(&self) -> CliResult<DynamicalPair> {
        let prime = self.alpha_prime.as_ref().ok_or_else(|| CliError::Invalid("missing \"alpha_prime\"".into()))?;
        Ok(DynamicalPair::new(self.alpha()?, DynamicalMap::from_nested(prime)?)?)
    }

    pub fn beta(&self) -> CliResult<Option<DynamicalMap>> {
        self.beta.as_ref().map(|b| DynamicalMap::from_nested(b).map_err(CliError::from)).transpose()
    }
}

/// A central extension with explicit maps, as written by `extend` and read by `extract`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionFile {
    pub base: StructureFile,
    pub coefficients: GroupFile,
    pub total: StructureFile,
    pub inclusion: Vec<usize>,
    pub projection: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<CochainFile>,
}

impl ExtensionFile {
    pub fn from_extension(ext: &CentralExtension) -> Self {
        ExtensionFile {
            base: StructureFile::from_lcs(ext.base()),
            coefficients: GroupFile::from_group(ext.coefficients()),
            total: StructureFile::from_lcs(ext.total()),
            inclusion: ext.inclusion().to_vec(),
            projection: ext.projection().to_vec(),
            section: Some(ext.section().to_vec()),
            cocycle: ext.cocycle().map(CochainFile::from_cochain),
        }
    }

    pub fn to_extension(&self) -> CliResult<CentralExtension> {
        Ok(CentralExtension::from_parts(
            self.base.to_lcs()?,
            self.coefficients.to_group()?,
            self.total.to_lcs()?,
            self.inclusion.clone(),
            self.projection.clone(),
        )?)
    }
}
