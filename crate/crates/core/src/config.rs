//! Vector configurations: an ordered sequence of linear forms over a field.
//!
//! A configuration always spans its ambient space. Inputs that span a proper
//! subspace are re-coordinatized onto the pivot columns of their row echelon
//! form, which preserves the matroid and the graded span of all products.
//! Every configuration also remembers, for each position, the 0-based index
//! of the element it came from, so derived configurations can be compared
//! against the original ground set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Echelon, Field, FieldSpec, Matrix, PrimeField, Rationals};
use crate::subset::{Subset, MAX_GROUND};

#[derive(Clone, Debug, PartialEq)]
pub struct VectorConfig<F: Field> {
    field: F,
    ell: usize,
    forms: Vec<Vec<F::Elem>>,
    labels: Vec<usize>,
}

/// Projects `forms` onto the pivot columns of their rref, so that the result
/// spans `K^rank`.
fn reduce_coordinates<F: Field>(field: &F, ell: usize, forms: Vec<Vec<F::Elem>>) -> (usize, Vec<Vec<F::Elem>>) {
    let m = Matrix::from_rows(field.clone(), ell, &forms);
    let (_, pivots) = m.rref();
    if pivots.len() == ell {
        return (ell, forms);
    }
    let reduced = forms
        .into_iter()
        .map(|f| pivots.iter().map(|&c| f[c].clone()).collect())
        .collect();
    (pivots.len(), reduced)
}

impl<F: Field> VectorConfig<F> {
    /// Validates and, if needed, reduces the forms to the subspace they span.
    pub fn new(field: F, ell: usize, forms: Vec<Vec<F::Elem>>) -> Result<Self> {
        if forms.len() > MAX_GROUND {
            return Err(Error::TooLarge { what: "ground set", size: forms.len(), cap: MAX_GROUND });
        }
        if forms.is_empty() && ell > 0 {
            return Err(Error::EmptyForms(ell));
        }
        for (index, f) in forms.iter().enumerate() {
            if f.len() != ell {
                return Err(Error::RaggedRows { index: index + 1, len: f.len(), ell });
            }
        }
        let labels = (0..forms.len()).collect();
        let (ell, forms) = reduce_coordinates(&field, ell, forms);
        Ok(VectorConfig { field, ell, forms, labels })
    }

    pub fn from_i64(field: F, ell: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let forms = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::new(field, ell, forms)
    }

    /// The configuration with no forms in a 0-dimensional space.
    pub fn empty(field: F) -> Self {
        VectorConfig { field, ell: 0, forms: Vec::new(), labels: Vec::new() }
    }

    fn with_labels(field: F, ell: usize, forms: Vec<Vec<F::Elem>>, labels: Vec<usize>) -> Self {
        let (ell, forms) = reduce_coordinates(&field, ell, forms);
        VectorConfig { field, ell, forms, labels }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.forms.len()
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n())
    }

    pub fn forms(&self) -> &[Vec<F::Elem>] {
        &self.forms
    }

    pub fn form(&self, i: usize) -> &[F::Elem] {
        &self.forms[i]
    }

    /// Original 0-based index of each position.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.field.clone(), self.ell, &self.forms)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n() {
            Err(Error::IndexOutOfRange(i + 1, self.n()))
        } else {
            Ok(())
        }
    }

    /// Dimension of the span of the forms indexed by `s`.
    pub fn rank_of(&self, s: Subset) -> usize {
        let mut e = Echelon::new(self.field.clone(), self.ell);
        for i in s.iter() {
            if e.is_full() {
                break;
            }
            e.insert(self.forms[i].clone());
        }
        e.rank()
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.forms[i].iter().all(|a| self.field.is_zero(a))
    }

    pub fn is_isthmus(&self, i: usize) -> bool {
        !self.is_loop(i) && self.rank_of(self.ground().without(i)) < self.ell
    }

    /// The sub-configuration on the positions in `s`, re-coordinatized onto
    /// the span of those forms.
    pub fn select(&self, s: Subset) -> VectorConfig<F> {
        let forms = s.iter().map(|i| self.forms[i].clone()).collect();
        let labels = s.iter().map(|i| self.labels[i]).collect();
        Self::with_labels(self.field.clone(), self.ell, forms, labels)
    }

    /// Deletes position `i`. Deleting an isthmus is rejected; use
    /// [`delete_reducing`](Self::delete_reducing) to allow it.
    pub fn delete(&self, i: usize) -> Result<VectorConfig<F>> {
        self.check_index(i)?;
        if self.is_isthmus(i) {
            return Err(Error::Isthmus(i + 1));
        }
        Ok(self.select(self.ground().without(i)))
    }

    /// Deletes position `i`, dropping to a smaller ambient space if `i` was an
    /// isthmus.
    pub fn delete_reducing(&self, i: usize) -> Result<VectorConfig<F>> {
        self.check_index(i)?;
        Ok(self.select(self.ground().without(i)))
    }

    /// Restricts every other form to the kernel of form `i`, expressed in the
    /// canonical kernel basis.
    pub fn contract(&self, i: usize) -> Result<VectorConfig<F>> {
        self.check_index(i)?;
        if self.is_loop(i) {
            return Err(Error::Loop(i + 1));
        }
        let f = &self.field;
        let row = Matrix::from_rows(f.clone(), self.ell, std::slice::from_ref(&self.forms[i]));
        let kernel = row.kernel_basis();
        let rest: Vec<usize> = (0..self.n()).filter(|&j| j != i).collect();
        let others = Matrix::from_rows(f.clone(), self.ell, &rest.iter().map(|&j| self.forms[j].clone()).collect::<Vec<_>>());
        let image = others.mul(&kernel);
        let labels = rest.iter().map(|&j| self.labels[j]).collect();
        Ok(Self::with_labels(f.clone(), self.ell - 1, image.to_rows(), labels))
    }

    /// Contracts the set `s`: a basis of `s` (greedy in index order) is
    /// contracted and the rest of `s`, now loops, is deleted.
    pub fn contract_set(&self, s: Subset) -> VectorConfig<F> {
        let mut basis = Subset::EMPTY;
        for i in s.iter() {
            if self.rank_of(basis.with(i)) > basis.len() {
                basis = basis.with(i);
            }
        }
        let keep = self.ground().difference(s);
        let mut cur = self.select(keep.union(basis));
        // positions shift as we go; basis elements are tracked by label
        let basis_labels: Vec<usize> = basis.iter().map(|i| self.labels[i]).collect();
        for lbl in basis_labels {
            let pos = cur.labels.iter().position(|&l| l == lbl).expect("label present");
            cur = cur.contract(pos).expect("basis element cannot become a loop");
        }
        cur
    }

    /// `m` copies of the configuration; copy `c` (0-based) of position `i` sits
    /// at `c * n + i`.
    pub fn parallel_extension(&self, m: usize) -> Result<VectorConfig<F>> {
        if m == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let n = self.n();
        if n * m > MAX_GROUND {
            return Err(Error::TooLarge { what: "parallel extension", size: n * m, cap: MAX_GROUND });
        }
        let mut forms = Vec::with_capacity(n * m);
        let mut labels = Vec::with_capacity(n * m);
        for _ in 0..m {
            forms.extend(self.forms.iter().cloned());
            labels.extend(self.labels.iter().copied());
        }
        Ok(VectorConfig { field: self.field.clone(), ell: self.ell, forms, labels })
    }

    /// Concatenation in the direct sum of the ambient spaces.
    pub fn direct_sum(&self, other: &VectorConfig<F>) -> Result<VectorConfig<F>> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.spec().to_string(), other.field.spec().to_string()));
        }
        let n = self.n();
        if n + other.n() > MAX_GROUND {
            return Err(Error::TooLarge { what: "direct sum", size: n + other.n(), cap: MAX_GROUND });
        }
        let ell = self.ell + other.ell;
        let zero = self.field.zero();
        let mut forms = Vec::with_capacity(n + other.n());
        for f in &self.forms {
            let mut v = f.clone();
            v.resize(ell, zero.clone());
            forms.push(v);
        }
        for f in &other.forms {
            let mut v = vec![zero.clone(); self.ell];
            v.extend(f.iter().cloned());
            forms.push(v);
        }
        let labels = self.labels.iter().copied().chain(other.labels.iter().map(|l| l + n)).collect();
        Ok(VectorConfig { field: self.field.clone(), ell, forms, labels })
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        let r = self.rank_of(x);
        self.ground().difference(x).iter().all(|e| self.rank_of(x.with(e)) > r)
    }

    /// The configuration of the forms in the flat `x`.
    pub fn restrict_to_flat(&self, x: Subset) -> Result<VectorConfig<F>> {
        if !x.is_subset_of(self.ground()) || !self.is_flat(x) {
            return Err(Error::NotAFlat(x.to_string()));
        }
        Ok(self.select(x))
    }

    pub fn format_forms(&self) -> Vec<String> {
        self.forms
            .iter()
            .map(|f| format!("({})", f.iter().map(|a| self.field.to_string(a)).collect::<Vec<_>>().join(",")))
            .collect()
    }
}

/// The JSON input format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigFile {
    pub field: FieldSpec,
    pub vectors: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
}

/// A configuration over a field chosen at runtime.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyConfig {
    Prime(VectorConfig<PrimeField>),
    Rational(VectorConfig<Rationals>),
}

/// Runs `$body` with `$cfg` bound to the typed configuration.
#[macro_export]
macro_rules! with_config {
    ($any:expr, $cfg:ident => $body:expr) => {
        match $any {
            $crate::config::AnyConfig::Prime($cfg) => $body,
            $crate::config::AnyConfig::Rational($cfg) => $body,
        }
    };
}

impl AnyConfig {
    pub fn from_file(file: &ConfigFile) -> Result<Self> {
        let ell = match (file.ell, file.vectors.first()) {
            (Some(l), _) => l,
            (None, Some(v)) => v.len(),
            (None, None) => 0,
        };
        match file.field.validate()? {
            FieldSpec::Prime { p } => Ok(AnyConfig::Prime(VectorConfig::from_i64(PrimeField::new(p)?, ell, &file.vectors)?)),
            FieldSpec::Rationals => Ok(AnyConfig::Rational(VectorConfig::from_i64(Rationals, ell, &file.vectors)?)),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        with_config!(self, c => c.field().spec())
    }

    pub fn n(&self) -> usize {
        with_config!(self, c => c.n())
    }

    pub fn ell(&self) -> usize {
        with_config!(self, c => c.ell())
    }
}

/// Parses the JSON configuration format.
pub fn parse_config(text: &str) -> Result<AnyConfig> {
    let file: ConfigFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    AnyConfig::from_file(&file)
}
