//! Python bindings: involutions, pseudo-power detection, periodicity
//! vectors, morphic words and the free-word trie search.
//!
//! Words are passed as strings (one character per letter) or, for
//! alphabets with multi-character letters, as lists of letter strings.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use pseudopower::{detect, search, Algorithm, Alphabet, Budget, Builtin, Error, PeriodicityProfile, Word, INFINITY};

fn value_error(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[derive(FromPyObject)]
enum Letters {
    Text(String),
    List(Vec<String>),
}

impl Letters {
    fn alphabet(self) -> PyResult<Arc<Alphabet>> {
        let alphabet = match self {
            Letters::Text(s) => Alphabet::from_chars(&s),
            Letters::List(v) => Alphabet::new(v),
        };
        alphabet.map(Arc::new).map_err(value_error)
    }

    fn word(self, alphabet: &Arc<Alphabet>) -> PyResult<Word> {
        match self {
            Letters::Text(s) => Word::parse(alphabet, &s),
            Letters::List(v) => Word::from_tokens(alphabet, &v.join(" ")),
        }
        .map_err(value_error)
    }
}

fn builtin(name: &str) -> PyResult<Builtin> {
    name.parse().map_err(value_error)
}

fn algorithm(name: &str) -> PyResult<Algorithm> {
    name.parse().map_err(value_error)
}

fn symbols(w: &Word) -> Vec<String> {
    w.letters().iter().map(|&a| w.alphabet().symbol(a).to_string()).collect()
}

/// An antimorphic involution over an ordered alphabet.
#[pyclass(module = "pseudopower_py", name = "Involution", from_py_object)]
#[derive(Clone)]
struct PyInvolution {
    inner: pseudopower::Involution,
}

#[pymethods]
impl PyInvolution {
    /// `alphabet` is a string of letters or a list of letter strings;
    /// `text` is `mir` or `(a,b),(c,d).mir`.
    #[new]
    #[pyo3(signature = (alphabet, text = "mir"))]
    fn new(alphabet: Letters, text: &str) -> PyResult<Self> {
        let inner = pseudopower::Involution::parse(alphabet.alphabet()?, text).map_err(value_error)?;
        Ok(PyInvolution { inner })
    }

    /// Watson-Crick complementarity `(A,T),(C,G).mir` over `ACGT`.
    #[staticmethod]
    fn watson_crick() -> Self {
        PyInvolution {
            inner: pseudopower::Involution::watson_crick(),
        }
    }

    /// Every antimorphic involution over the alphabet.
    #[staticmethod]
    fn enumerate(alphabet: Letters) -> PyResult<Vec<Self>> {
        Ok(pseudopower::Involution::enumerate(alphabet.alphabet()?)
            .into_iter()
            .map(|inner| PyInvolution { inner })
            .collect())
    }

    #[getter]
    fn alphabet(&self) -> Vec<String> {
        self.inner.alphabet().symbols().to_vec()
    }

    /// Letters fixed by the involution.
    fn idt(&self) -> Vec<String> {
        let sigma = self.inner.alphabet();
        self.inner.classify().idt.iter().map(|&a| sigma.symbol(a).to_string()).collect()
    }

    /// The smaller letter of each transposition.
    fn trn(&self) -> Vec<String> {
        let sigma = self.inner.alphabet();
        self.inner.classify().trn.iter().map(|&a| sigma.symbol(a).to_string()).collect()
    }

    /// The transposition pairs, in alphabet order.
    fn transpositions(&self) -> Vec<(String, String)> {
        let sigma = self.inner.alphabet();
        self.inner
            .decompose()
            .transpositions
            .iter()
            .map(|&(a, b)| (sigma.symbol(a).to_string(), sigma.symbol(b).to_string()))
            .collect()
    }

    /// The image of a word, as a list of letters.
    fn apply(&self, word: Letters) -> PyResult<Vec<String>> {
        let w = word.word(self.inner.alphabet())?;
        Ok(symbols(&self.inner.apply(&w).map_err(value_error)?))
    }

    fn is_mirror(&self) -> bool {
        self.inner.is_mirror()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Involution({:?}, {:?})", self.inner.alphabet().to_string(), self.inner.to_string())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// One occurrence of a pseudo k-th power; `start` is 1-based.
#[pyclass(module = "pseudopower_py", name = "Hit", frozen, get_all)]
struct PyHit {
    start: usize,
    block_len: usize,
    k: usize,
    pattern: Vec<&'static str>,
}

#[pymethods]
impl PyHit {
    fn __repr__(&self) -> String {
        format!(
            "Hit(start={}, block_len={}, k={}, pattern={:?})",
            self.start, self.block_len, self.k, self.pattern
        )
    }
}

impl From<&pseudopower::PseudoPowerHit> for PyHit {
    fn from(h: &pseudopower::PseudoPowerHit) -> Self {
        PyHit {
            start: h.start,
            block_len: h.block_len,
            k: h.k,
            pattern: h.pattern.iter().map(|t| t.name()).collect(),
        }
    }
}

/// Some pseudo k-th power in `word`, or `None` if it is free.
#[pyfunction]
#[pyo3(signature = (word, involution, k, algorithm = "auto"))]
fn first_hit(word: Letters, involution: &PyInvolution, k: usize, algorithm: &str) -> PyResult<Option<PyHit>> {
    let phi = &involution.inner;
    let w = word.word(phi.alphabet())?;
    let hit = detect::first_hit(&w, phi, k, self::algorithm(algorithm)?).map_err(value_error)?;
    Ok(hit.as_ref().map(PyHit::from))
}

/// True iff `word` contains no pseudo k-th power.
#[pyfunction]
#[pyo3(signature = (word, involution, k, algorithm = "auto"))]
fn is_free(word: Letters, involution: &PyInvolution, k: usize, algorithm: &str) -> PyResult<bool> {
    Ok(first_hit(word, involution, k, algorithm)?.is_none())
}

/// Every pseudo k-th power occurrence, sorted by `(start, block_len)`.
#[pyfunction]
#[pyo3(signature = (word, involution, k, algorithm = "auto"))]
fn find_all(word: Letters, involution: &PyInvolution, k: usize, algorithm: &str) -> PyResult<Vec<PyHit>> {
    let phi = &involution.inner;
    let w = word.word(phi.alphabet())?;
    let hits = detect::find_all(&w, phi, k, self::algorithm(algorithm)?).map_err(value_error)?;
    Ok(hits.iter().map(PyHit::from).collect())
}

/// Shortest-square and centred pseudo-palindrome vectors. `None` in
/// `rmp`/`lmp` means no square starts/ends there; `cmp` has one entry per
/// gap, both ends included.
#[pyclass(module = "pseudopower_py", name = "Profile", frozen, get_all)]
struct PyProfile {
    word_len: usize,
    rmp: Vec<Option<usize>>,
    lmp: Vec<Option<usize>>,
    cmp: Vec<usize>,
}

#[pyfunction]
fn profile(word: Letters, involution: &PyInvolution) -> PyResult<PyProfile> {
    let phi = &involution.inner;
    let w = word.word(phi.alphabet())?;
    let p = PeriodicityProfile::compute(&w, phi).map_err(value_error)?;
    let finite = |v: Vec<usize>| v.into_iter().map(|x| (x != INFINITY).then_some(x)).collect();
    Ok(PyProfile {
        word_len: p.word_len,
        rmp: finite(p.rmp),
        lmp: finite(p.lmp),
        cmp: p.cmp,
    })
}

/// The length-`length` prefix of a built-in morphic word (seed `0`).
#[pyfunction]
fn generate(name: &str, length: usize) -> PyResult<String> {
    let morphism = builtin(name)?.morphism();
    if length == 0 {
        return Ok(String::new());
    }
    let w = morphism.fixed_point_prefix(0, length).map_err(value_error)?;
    Ok(w.factor(1, length).expect("prefix is long enough").to_string())
}

/// True iff the length-`length` prefix of the built-in morphic word is
/// pseudo-k-th-power-free under `involution`.
#[pyfunction]
fn verify_free_prefix(name: &str, involution: &PyInvolution, k: usize, length: usize) -> PyResult<bool> {
    search::verify_free_prefix(builtin(name)?, &involution.inner, k, length).map_err(value_error)
}

/// True iff `word` alternates between the two orbits of a 4-letter
/// involution with two transpositions and is square-free.
#[pyfunction]
fn check_alternation(word: Letters, involution: &PyInvolution) -> PyResult<bool> {
    let w = word.word(involution.inner.alphabet())?;
    search::check_alternation(&w, &involution.inner).map_err(value_error)
}

#[pyclass(module = "pseudopower_py", name = "SearchReport", frozen, get_all)]
struct PySearchReport {
    nodes: u64,
    leaves: u64,
    depth: usize,
    free: u64,
    longest: Vec<String>,
    exhausted: bool,
}

#[pymethods]
impl PySearchReport {
    fn __repr__(&self) -> String {
        format!(
            "SearchReport(nodes={}, leaves={}, depth={}, exhausted={})",
            self.nodes,
            self.leaves,
            self.depth,
            if self.exhausted { "True" } else { "False" }
        )
    }
}

/// Enumerates the trie of pseudo-k-th-power-free words over the
/// involution's alphabet.
#[pyfunction]
#[pyo3(signature = (involution, k, max_depth = None, max_nodes = None, jobs = 1))]
fn dfs_search(
    py: Python<'_>,
    involution: &PyInvolution,
    k: usize,
    max_depth: Option<usize>,
    max_nodes: Option<u64>,
    jobs: usize,
) -> PyResult<PySearchReport> {
    let phi = involution.inner.clone();
    let budget = Budget { max_depth, max_nodes };
    let r = py
        .detach(|| search::dfs_search_parallel(phi.alphabet(), &phi, k, budget, jobs.max(1)))
        .map_err(value_error)?;
    Ok(PySearchReport {
        nodes: r.total_nodes,
        leaves: r.leaf_nodes,
        depth: r.depth,
        free: r.free_words,
        longest: r.longest_free_words.iter().map(ToString::to_string).collect(),
        exhausted: r.exhausted,
    })
}

#[pymodule]
fn pseudopower_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}

/// Adds every class and function of the extension to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInvolution>()?;
    m.add_class::<PyHit>()?;
    m.add_class::<PyProfile>()?;
    m.add_class::<PySearchReport>()?;
    m.add_function(wrap_pyfunction!(first_hit, m)?)?;
    m.add_function(wrap_pyfunction!(is_free, m)?)?;
    m.add_function(wrap_pyfunction!(find_all, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_free_prefix, m)?)?;
    m.add_function(wrap_pyfunction!(check_alternation, m)?)?;
    m.add_function(wrap_pyfunction!(dfs_search, m)?)?;
    Ok(())
}
