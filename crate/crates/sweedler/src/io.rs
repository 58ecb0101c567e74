//! On-disk formats: JSON algebra files (with automorphism matrices) and
//! representation files, all cyclotomic values as canonical literals.
//!
//! Export is canonical — field order, spacing, and literal spelling are
//! stable — so export ∘ import ∘ export is byte-identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cyclo::{parse_cyc, CycNumber};
use crate::linalg::Matrix;
use crate::reps::Representation;
use crate::structures::{ComultRow, Elem, HopfAlgebra, StructureError};

/// Errors while reading an algebra or representation file.
#[derive(Debug, thiserror::Error)]
pub enum IoError {
    /// The file is not well-formed JSON for the expected shape.
    #[error("malformed file: {0}")]
    Json(#[from] serde_json::Error),
    /// A cyclotomic literal failed to parse.
    #[error("bad cyclotomic literal at {location}: {message}")]
    Literal {
        /// Which field and index the literal sits in.
        location: String,
        /// The underlying parse failure.
        message: String,
    },
    /// The declared dimension disagrees with the basis list.
    #[error("file declares dim = {declared} but lists {found} basis labels")]
    DimMismatch {
        /// Value of the `dim` field.
        declared: usize,
        /// Number of basis labels.
        found: usize,
    },
    /// A representation file names a different algebra.
    #[error("representation file targets algebra '{file_algebra}' but '{loaded}' is loaded")]
    AlgebraMismatch {
        /// The algebra the file claims to act for.
        file_algebra: String,
        /// The algebra actually loaded.
        loaded: String,
    },
    /// Structural shape validation failed.
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// An algebra parsed from a file; automorphism matrices are raw (their
/// validity is a check, not a parse precondition).
pub struct ImportedAlgebra {
    /// The shape-validated algebra (axioms not yet checked).
    pub algebra: HopfAlgebra,
    /// Named candidate automorphism matrices in file order.
    pub automorphism_matrices: Vec<(String, Matrix)>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    name: String,
    dim: usize,
    basis: Vec<String>,
    mult: Vec<Vec<Vec<String>>>,
    unit: Vec<String>,
    comult: Vec<Vec<(String, usize, usize)>>,
    counit: Vec<String>,
    antipode: Vec<Vec<String>>,
    automorphisms: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
struct RepresentationFile {
    algebra: String,
    #[serde(rename = "dim_V")]
    dim_v: usize,
    action: Vec<Vec<Vec<String>>>,
}

fn literals(coords: &[CycNumber]) -> Vec<String> {
    coords.iter().map(CycNumber::format).collect()
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.at(r, c).format()).collect())
        .collect()
}

/// Renders an algebra and its automorphisms in the canonical file format.
pub fn export_algebra(h: &HopfAlgebra, automorphisms: &[(String, Matrix)]) -> String {
    let n = h.dim();
    let file = AlgebraFile {
        name: h.name().to_string(),
        dim: n,
        basis: h.basis_labels().to_vec(),
        mult: (0..n)
            .map(|i| (0..n).map(|j| literals(h.mult_entry(i, j).coords())).collect())
            .collect(),
        unit: literals(h.unit_elem().coords()),
        comult: (0..n)
            .map(|i| {
                h.comult_entry(i)
                    .iter()
                    .map(|(c, l, r)| (c.format(), *l, *r))
                    .collect()
            })
            .collect(),
        counit: literals(h.counit_coeffs()),
        antipode: matrix_rows(h.antipode_matrix()),
        automorphisms: automorphisms
            .iter()
            .map(|(name, m)| (name.clone(), matrix_rows(m)))
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("file structs always serialize");
    text.push('\n');
    text
}

fn parse_literal(text: &str, location: impl Fn() -> String) -> Result<CycNumber, IoError> {
    parse_cyc(text).map_err(|e| IoError::Literal { location: location(), message: e.to_string() })
}

fn parse_matrix(
    rows: &[Vec<String>],
    field: &str,
    name: Option<&str>,
) -> Result<Matrix, IoError> {
    let parsed: Vec<Vec<CycNumber>> = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, lit)| {
                    parse_literal(lit, || match name {
                        Some(n) => format!("{field}['{n}'][{r}][{c}]"),
                        None => format!("{field}[{r}][{c}]"),
                    })
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    Ok(Matrix::from_rows(parsed))
}

/// Parses the canonical algebra format. Shapes are validated; the Hopf axioms
/// and the automorphism checks are left to the caller.
pub fn import_algebra(text: &str) -> Result<ImportedAlgebra, IoError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    if file.dim != file.basis.len() {
        return Err(IoError::DimMismatch { declared: file.dim, found: file.basis.len() });
    }
    let mult: Vec<Vec<Elem>> = file
        .mult
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, coords)| {
                    let parsed: Vec<CycNumber> = coords
                        .iter()
                        .enumerate()
                        .map(|(k, lit)| parse_literal(lit, || format!("mult[{i}][{j}][{k}]")))
                        .collect::<Result<_, _>>()?;
                    Ok(Elem::from_coords(parsed))
                })
                .collect::<Result<_, IoError>>()
        })
        .collect::<Result<_, _>>()?;
    let unit: Vec<CycNumber> = file
        .unit
        .iter()
        .enumerate()
        .map(|(k, lit)| parse_literal(lit, || format!("unit[{k}]")))
        .collect::<Result<_, _>>()?;
    let comult: Vec<ComultRow> = file
        .comult
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(t, (lit, l, r))| {
                    Ok((parse_literal(lit, || format!("comult[{i}][{t}]"))?, *l, *r))
                })
                .collect::<Result<_, IoError>>()
        })
        .collect::<Result<_, _>>()?;
    let counit: Vec<CycNumber> = file
        .counit
        .iter()
        .enumerate()
        .map(|(k, lit)| parse_literal(lit, || format!("counit[{k}]")))
        .collect::<Result<_, _>>()?;
    let antipode = parse_matrix(&file.antipode, "antipode", None)?;
    let algebra = HopfAlgebra::new(
        file.name,
        file.basis,
        mult,
        Elem::from_coords(unit),
        comult,
        counit,
        antipode,
    )?;
    let automorphism_matrices = file
        .automorphisms
        .iter()
        .map(|(name, rows)| {
            Ok((name.clone(), parse_matrix(rows, "automorphisms", Some(name))?))
        })
        .collect::<Result<_, IoError>>()?;
    Ok(ImportedAlgebra { algebra, automorphism_matrices })
}

/// Renders a representation in the canonical file format.
pub fn export_representation(rho: &Representation) -> String {
    let file = RepresentationFile {
        algebra: rho.algebra_name().to_string(),
        dim_v: rho.dim_v(),
        action: (0..rho.action_len()).map(|i| matrix_rows(rho.action(i))).collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("file structs always serialize");
    text.push('\n');
    text
}

/// Parses a representation file against a loaded algebra. The action's module
/// axioms are left to [`crate::reps::verify_representation`].
pub fn import_representation(
    text: &str,
    h: &HopfAlgebra,
    name: &str,
) -> Result<Representation, IoError> {
    let file: RepresentationFile = serde_json::from_str(text)?;
    if file.algebra != h.name() {
        return Err(IoError::AlgebraMismatch {
            file_algebra: file.algebra,
            loaded: h.name().to_string(),
        });
    }
    let action: Vec<Matrix> = file
        .action
        .iter()
        .map(|rows| parse_matrix(rows, "action", None))
        .collect::<Result<_, _>>()?;
    for (i, m) in action.iter().enumerate() {
        if m.rows() != file.dim_v || m.cols() != file.dim_v {
            return Err(StructureError::InvalidStructure {
                message: format!(
                    "action matrix {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    file.dim_v,
                    file.dim_v
                ),
            }
            .into());
        }
    }
    Ok(Representation::new(h, name.to_string(), action)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{builtin, builtin_h8};
    use crate::reps::verify_representation;
    use crate::structures::HopfAutomorphism;

    fn named_matrices(package: &crate::builtin::AlgebraPackage) -> Vec<(String, Matrix)> {
        package
            .automorphisms
            .iter()
            .map(|t| (t.name().to_string(), t.matrix().clone()))
            .collect()
    }

    #[test]
    fn export_import_export_is_byte_identical() {
        let package = builtin_h8();
        let text = export_algebra(&package.algebra, &named_matrices(&package));
        let imported = import_algebra(&text).unwrap();
        let text2 = export_algebra(
            &imported.algebra,
            &imported.automorphism_matrices,
        );
        assert_eq!(text, text2);
    }

    #[test]
    fn import_restores_identical_structure_constants() {
        let package = builtin_h8();
        let h = &package.algebra;
        let text = export_algebra(h, &named_matrices(&package));
        let imported = import_algebra(&text).unwrap();
        let g = &imported.algebra;
        assert_eq!(g.name(), h.name());
        assert_eq!(g.basis_labels(), h.basis_labels());
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                assert_eq!(g.mult_entry(i, j), h.mult_entry(i, j));
            }
            assert_eq!(g.comult_entry(i), h.comult_entry(i));
        }
        assert_eq!(g.counit_coeffs(), h.counit_coeffs());
        assert_eq!(g.antipode_matrix(), h.antipode_matrix());
        assert!(g.verify_axioms().all_passed());
        // The automorphism matrices re-validate against the re-imported algebra.
        for (name, matrix) in &imported.automorphism_matrices {
            HopfAutomorphism::new(g, name.clone(), matrix.clone(), 16).unwrap();
        }
    }

    #[test]
    fn exported_text_contains_the_half_literals() {
        let package = builtin_h8();
        let text = export_algebra(&package.algebra, &[]);
        assert!(text.contains("\"1/2\""));
        assert!(text.contains("\"-1/2\""));
    }

    #[test]
    fn representation_files_round_trip() {
        let package = builtin_h8();
        let h = &package.algebra;
        let v5 = package.module("V5").unwrap();
        let text = export_representation(v5);
        let restored = import_representation(&text, h, "V5").unwrap();
        assert!(verify_representation(h, &restored).all_passed());
        for i in 0..h.dim() {
            assert_eq!(restored.action(i), v5.action(i));
        }
        assert_eq!(export_representation(&restored), text);
    }

    #[test]
    fn representation_for_a_different_algebra_is_rejected() {
        let package = builtin_h8();
        let c2 = builtin("c2").unwrap();
        let text = export_representation(package.module("V1").unwrap());
        assert!(matches!(
            import_representation(&text, &c2.algebra, "V1"),
            Err(IoError::AlgebraMismatch { .. })
        ));
    }

    #[test]
    fn malformed_inputs_give_targeted_errors() {
        assert!(matches!(import_algebra("not json"), Err(IoError::Json(_))));

        let package = builtin("c2").unwrap();
        let good = export_algebra(&package.algebra, &[]);
        let bad_literal = good.replace("\"1\"", "\"1 +\"");
        match import_algebra(&bad_literal) {
            Err(IoError::Literal { location, .. }) => {
                assert!(!location.is_empty());
            }
            other => panic!("expected a literal error, got {:?}", other.err()),
        }

        let bad_dim = good.replace("\"dim\": 2", "\"dim\": 3");
        assert!(matches!(
            import_algebra(&bad_dim),
            Err(IoError::DimMismatch { declared: 3, found: 2 })
        ));
    }
}
