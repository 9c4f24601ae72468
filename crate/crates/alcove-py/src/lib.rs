//! Python bindings for the alcove crate: root systems and their counting
//! formulas, based galleries with the root operators, crystal graphs, module
//! polytopes, and exact polytope arithmetic.
//!
//! Conventions exposed to Python: coweights are lists of integers in
//! fundamental-coweight coordinates; operator indices are 1-based; weight
//! histograms use `"a,b"` string keys; rational coordinates travel as
//! lowest-term strings like `"2/3"`.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use alcove::crystal as crys;
use alcove::gallery as gal;
use alcove::polytope as poly;
use alcove::quiver as quiv;
use alcove::root_data as roots;
use alcove::{AlcoveError, LatticeVector};

fn to_py_err(e: AlcoveError) -> PyErr {
    match e {
        AlcoveError::BudgetExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn coords_key(coords: &[i64]) -> String {
    coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn op_index(rs: &alcove::RootSystem, i: usize) -> PyResult<usize> {
    if i == 0 || i > rs.rank() {
        return Err(PyValueError::new_err(format!(
            "operator index {i} out of range 1..={}",
            rs.rank()
        )));
    }
    Ok(i - 1)
}

/// A simply laced root system of type A, with the counting oracles.
#[pyclass(name = "RootSystem", skip_from_py_object)]
#[derive(Clone)]
struct PyRootSystem {
    inner: alcove::RootSystem,
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(rank: usize) -> PyResult<Self> {
        Ok(PyRootSystem {
            inner: alcove::RootSystem::type_a(rank).map_err(to_py_err)?,
        })
    }

    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn num_positive_roots(&self) -> usize {
        self.inner.num_positive_roots()
    }

    /// Weyl dimension of the highest-weight module at a dominant coweight.
    fn weyl_dim(&self, coweight: Vec<i64>) -> PyResult<u64> {
        roots::weyl_dim(&self.inner, &LatticeVector::coweight(coweight)).map_err(to_py_err)
    }

    /// `⟨2ρ, μ⟩` for a dominant coweight.
    fn schubert_cell_dim(&self, coweight: Vec<i64>) -> PyResult<i64> {
        roots::schubert_cell_dim(&self.inner, &LatticeVector::coweight(coweight))
            .map_err(to_py_err)
    }

    fn dominance_leq(&self, lhs: Vec<i64>, rhs: Vec<i64>) -> PyResult<bool> {
        roots::dominance_leq(
            &self.inner,
            &LatticeVector::coweight(lhs),
            &LatticeVector::coweight(rhs),
        )
        .map_err(to_py_err)
    }

    /// Multiplicity of `weight` in the module with highest weight `coweight`.
    fn multiplicity(&self, coweight: Vec<i64>, weight: Vec<i64>) -> PyResult<u64> {
        roots::freudenthal_multiplicity(
            &self.inner,
            &LatticeVector::coweight(coweight),
            &LatticeVector::coweight(weight),
        )
        .map_err(to_py_err)
    }

    /// Full weight-multiplicity table, keyed by `"a,b"` coordinate strings.
    fn multiplicities(&self, coweight: Vec<i64>) -> PyResult<BTreeMap<String, u64>> {
        let table =
            roots::weight_multiplicities(&self.inner, &LatticeVector::coweight(coweight))
                .map_err(to_py_err)?;
        Ok(table.into_iter().map(|(k, v)| (coords_key(&k), v)).collect())
    }

    /// The canonical based gallery from the origin to `{λ}`.
    fn minimal_gallery(&self, coweight: Vec<i64>) -> PyResult<PyGallery> {
        let gallery = gal::minimal_gallery(&self.inner, &LatticeVector::coweight(coweight))
            .map_err(to_py_err)?;
        Ok(PyGallery {
            rs: self.inner.clone(),
            inner: gallery,
        })
    }

    /// Counts of LS galleries by weight: `(total, {"a,b": count})`.
    #[pyo3(signature = (coweight, budget=1_000_000))]
    fn ls_counts(&self, coweight: Vec<i64>, budget: u64) -> PyResult<(u64, BTreeMap<String, u64>)> {
        let gamma = gal::minimal_gallery(&self.inner, &LatticeVector::coweight(coweight))
            .map_err(to_py_err)?;
        let hist = gal::ls_weight_histogram(
            &self.inner,
            &gamma,
            gal::WalkOptions {
                positively_folded_only: true,
                budget,
            },
            None,
        )
        .map_err(to_py_err)?;
        let total = hist.values().sum();
        Ok((
            total,
            hist.into_iter().map(|(k, v)| (coords_key(&k), v)).collect(),
        ))
    }

    /// All LS galleries of the based type, in canonical order.
    fn ls_galleries(&self, coweight: Vec<i64>) -> PyResult<Vec<PyGallery>> {
        let gamma = gal::minimal_gallery(&self.inner, &LatticeVector::coweight(coweight))
            .map_err(to_py_err)?;
        let ls = gal::enumerate_ls(&self.inner, &gamma).map_err(to_py_err)?;
        Ok(ls
            .into_iter()
            .map(|g| PyGallery {
                rs: self.inner.clone(),
                inner: g,
            })
            .collect())
    }

    /// Crystal graph grown from the based gallery.
    #[pyo3(signature = (coweight, node_cap=1_000_000))]
    fn crystal(&self, coweight: Vec<i64>, node_cap: usize) -> PyResult<PyCrystalGraph> {
        let gamma = gal::minimal_gallery(&self.inner, &LatticeVector::coweight(coweight))
            .map_err(to_py_err)?;
        let graph = crys::generate_crystal(&self.inner, &gamma, node_cap).map_err(to_py_err)?;
        Ok(PyCrystalGraph {
            rs: self.inner.clone(),
            inner: graph,
        })
    }

    fn __repr__(&self) -> String {
        format!("RootSystem(type A, rank {})", self.inner.rank())
    }
}

/// A gallery from the origin, with the root operators.
#[pyclass(name = "Gallery", skip_from_py_object)]
#[derive(Clone)]
struct PyGallery {
    rs: alcove::RootSystem,
    inner: gal::Gallery,
}

#[pymethods]
impl PyGallery {
    /// Endpoint in fundamental-coweight coordinates.
    fn weight(&self) -> PyResult<Vec<i64>> {
        Ok(gal::weight(&self.rs, &self.inner)
            .map_err(to_py_err)?
            .coords()
            .to_vec())
    }

    fn p(&self) -> usize {
        self.inner.p()
    }

    fn dimension(&self) -> PyResult<i64> {
        gal::gallery_dim(&self.rs, &self.inner).map_err(to_py_err)
    }

    fn is_positively_folded(&self) -> PyResult<bool> {
        gal::is_positively_folded(&self.rs, &self.inner).map_err(to_py_err)
    }

    fn is_ls(&self, based: &PyGallery) -> PyResult<bool> {
        gal::is_ls(&self.rs, &self.inner, &based.inner).map_err(to_py_err)
    }

    /// `ε_i` with 1-based `i`.
    fn epsilon(&self, i: usize) -> PyResult<i64> {
        crys::epsilon(&self.rs, &self.inner, op_index(&self.rs, i)?).map_err(to_py_err)
    }

    /// `φ_i` with 1-based `i`.
    fn phi(&self, i: usize) -> PyResult<i64> {
        crys::phi(&self.rs, &self.inner, op_index(&self.rs, i)?).map_err(to_py_err)
    }

    /// Raising operator; `None` when undefined.
    fn e(&self, i: usize) -> PyResult<Option<PyGallery>> {
        let out = crys::e_op(&self.rs, &self.inner, op_index(&self.rs, i)?).map_err(to_py_err)?;
        Ok(out.map(|g| PyGallery {
            rs: self.rs.clone(),
            inner: g,
        }))
    }

    /// Lowering operator; `None` when undefined.
    fn f(&self, i: usize) -> PyResult<Option<PyGallery>> {
        let out = crys::f_op(&self.rs, &self.inner, op_index(&self.rs, i)?).map_err(to_py_err)?;
        Ok(out.map(|g| PyGallery {
            rs: self.rs.clone(),
            inner: g,
        }))
    }

    fn to_json(&self) -> PyResult<String> {
        let dto = gal::gallery_to_dto(&self.rs, &self.inner).map_err(to_py_err)?;
        serde_json::to_string(&dto).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    fn __eq__(&self, other: &PyGallery) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> PyResult<String> {
        Ok(format!(
            "Gallery(p={}, weight={:?})",
            self.inner.p(),
            self.weight()?
        ))
    }
}

/// A finite crystal graph.
#[pyclass(name = "CrystalGraph")]
struct PyCrystalGraph {
    rs: alcove::RootSystem,
    inner: crys::CrystalGraph,
}

#[pymethods]
impl PyCrystalGraph {
    fn node_count(&self) -> usize {
        self.inner.node_count()
    }

    /// Node weights in canonical node order.
    fn weights(&self) -> Vec<Vec<i64>> {
        self.inner
            .nodes
            .iter()
            .map(|n| n.weight.coords().to_vec())
            .collect()
    }

    /// Edges `(from, to, i)` with 1-based operator index.
    fn edges(&self) -> Vec<(usize, usize, usize)> {
        self.inner
            .edges
            .iter()
            .map(|&(a, b, i)| (a, b, i + 1))
            .collect()
    }

    /// Indices of nodes with every raising operator undefined.
    fn sources(&self) -> Vec<usize> {
        self.inner.sources()
    }

    /// Run the five structural axioms; returns the violation report lines.
    fn verify(&self) -> PyResult<Vec<String>> {
        let report = crys::verify_axioms(&self.rs, &self.inner).map_err(to_py_err)?;
        Ok(report.violations.iter().map(|v| v.to_string()).collect())
    }

    fn to_dot(&self) -> String {
        crys::crystal_to_dot(&self.inner)
    }

    #[pyo3(signature = (include_galleries=false))]
    fn to_json(&self, include_galleries: bool) -> PyResult<String> {
        let dto = crys::crystal_to_dto(&self.rs, &self.inner, include_galleries)
            .map_err(to_py_err)?;
        serde_json::to_string(&dto).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!(
            "CrystalGraph({} nodes, {} edges)",
            self.inner.node_count(),
            self.inner.edges.len()
        )
    }
}

/// A module over the doubled linear quiver.
#[pyclass(name = "QuiverModule", skip_from_py_object)]
#[derive(Clone)]
struct PyQuiverModule {
    inner: quiv::QuiverModule,
}

fn parse_method(method: &str, prime: u32) -> PyResult<quiv::SubmoduleMethod> {
    match method {
        "coordinate" => Ok(quiv::SubmoduleMethod::Coordinate),
        "exhaustive" => Ok(quiv::SubmoduleMethod::Exhaustive { prime }),
        other => Err(PyValueError::new_err(format!(
            "unknown method {other:?}; use \"coordinate\" or \"exhaustive\""
        ))),
    }
}

#[pymethods]
impl PyQuiverModule {
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().to_vec()
    }

    fn total_dim(&self) -> usize {
        self.inner.total_dim()
    }

    fn is_combinatorial(&self) -> bool {
        self.inner.is_combinatorial()
    }

    fn preprojective(&self) -> PyResult<bool> {
        quiv::verify_preprojective(&self.inner).map_err(to_py_err)
    }

    #[pyo3(signature = (method="coordinate", prime=2))]
    fn dim_vectors(&self, method: &str, prime: u32) -> PyResult<Vec<Vec<i64>>> {
        let set = quiv::submodule_dim_vectors(&self.inner, parse_method(method, prime)?)
            .map_err(to_py_err)?;
        Ok(set.into_iter().collect())
    }

    #[pyo3(signature = (method="coordinate", prime=2))]
    fn pol(&self, method: &str, prime: u32) -> PyResult<PyPolytope> {
        let p = quiv::pol_with(&self.inner, parse_method(method, prime)?).map_err(to_py_err)?;
        Ok(PyPolytope { inner: p })
    }

    fn direct_sum(&self, other: &PyQuiverModule) -> PyResult<PyQuiverModule> {
        Ok(PyQuiverModule {
            inner: quiv::direct_sum(&self.inner, &other.inner).map_err(to_py_err)?,
        })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&quiv::module_to_dto(&self.inner))
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("QuiverModule(dims={:?})", self.inner.dims())
    }
}

/// A convex hull of rational points, held by its canonical vertex list.
#[pyclass(name = "Polytope", from_py_object)]
#[derive(Clone)]
struct PyPolytope {
    inner: poly::LatticePolytope,
}

fn parse_point(coords: Vec<String>) -> PyResult<alcove::RationalPoint> {
    let parsed = coords
        .iter()
        .map(|s| {
            s.parse::<alcove::Rat>()
                .map_err(|e| PyValueError::new_err(format!("bad rational {s:?}: {e}")))
        })
        .collect::<PyResult<Vec<_>>>()?;
    Ok(alcove::RationalPoint::new(parsed))
}

#[pymethods]
impl PyPolytope {
    #[new]
    fn new(vertices: Vec<Vec<String>>) -> PyResult<Self> {
        let points = vertices
            .into_iter()
            .map(parse_point)
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyPolytope {
            inner: poly::convex_hull(&points).map_err(to_py_err)?,
        })
    }

    /// Canonical vertices as lowest-term coordinate strings.
    fn vertices(&self) -> Vec<Vec<String>> {
        self.inner
            .vertices()
            .iter()
            .map(|v| v.coords().iter().map(|c| c.to_string()).collect())
            .collect()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn contains(&self, point: Vec<String>) -> PyResult<bool> {
        poly::contains(&self.inner, &parse_point(point)?).map_err(to_py_err)
    }

    fn minkowski(&self, other: &PyPolytope) -> PyResult<PyPolytope> {
        Ok(PyPolytope {
            inner: poly::minkowski_sum(&self.inner, &other.inner).map_err(to_py_err)?,
        })
    }

    fn dilate(&self, factor: i64) -> PyPolytope {
        PyPolytope {
            inner: self.inner.dilate(factor),
        }
    }

    /// Exact area (rank-2 only), as a rational string.
    fn area(&self) -> PyResult<String> {
        Ok(poly::area(&self.inner).map_err(to_py_err)?.to_string())
    }

    fn __eq__(&self, other: &PyPolytope) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Polytope({} vertices, dim {})", self.inner.vertices().len(), self.inner.dim())
    }
}

/// The Maya module `N(A)` on the doubled linear `A_n` quiver.
#[pyfunction]
fn maya_module(n: usize, a_set: Vec<usize>) -> PyResult<PyQuiverModule> {
    Ok(PyQuiverModule {
        inner: quiv::maya_module(n, &a_set).map_err(to_py_err)?,
    })
}

/// The four fixture modules of the doubled `A_2` quiver, in order
/// `(A, B, C, D)`.
#[pyfunction]
fn a2_modules() -> (PyQuiverModule, PyQuiverModule, PyQuiverModule, PyQuiverModule) {
    let [a, b, c, d] = quiv::a2_module_fixtures();
    (
        PyQuiverModule { inner: a },
        PyQuiverModule { inner: b },
        PyQuiverModule { inner: c },
        PyQuiverModule { inner: d },
    )
}

/// The primitive rank-2 generators as `{"alpha1": .., "alpha2": ..,
/// "beta1": .., "beta2": ..}`.
#[pyfunction]
fn primitive_a2() -> BTreeMap<String, PyPolytope> {
    let prim = poly::primitive_a2();
    BTreeMap::from([
        ("alpha1".to_string(), PyPolytope { inner: prim.alpha1 }),
        ("alpha2".to_string(), PyPolytope { inner: prim.alpha2 }),
        ("beta1".to_string(), PyPolytope { inner: prim.beta1 }),
        ("beta2".to_string(), PyPolytope { inner: prim.beta2 }),
    ])
}

/// Do the parts tile the whole (rank 2, up to three parts)?
#[pyfunction]
fn union_equals(parts: Vec<PyPolytope>, whole: &PyPolytope) -> PyResult<bool> {
    let inner: Vec<poly::LatticePolytope> = parts.into_iter().map(|p| p.inner).collect();
    poly::union_equals(&inner, &whole.inner).map_err(to_py_err)
}

#[pymodule]
fn alcove_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<PyGallery>()?;
    m.add_class::<PyCrystalGraph>()?;
    m.add_class::<PyQuiverModule>()?;
    m.add_class::<PyPolytope>()?;
    m.add_function(wrap_pyfunction!(maya_module, m)?)?;
    m.add_function(wrap_pyfunction!(a2_modules, m)?)?;
    m.add_function(wrap_pyfunction!(primitive_a2, m)?)?;
    m.add_function(wrap_pyfunction!(union_equals, m)?)?;
    Ok(())
}
