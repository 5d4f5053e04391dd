//! Constructions addressed by name, for the command line and the table code.

use super::*;
use crate::spectra::{delete_clique, exact_spectrum, find_switching_clique, Spectrum};

/// Names accepted by [`build`]; `Q`, `D`, `I`, `V`, `J` are parameters.
pub const CATALOG: &[&str] = &[
    "netto",
    "witt",
    "hadamard16",
    "srg40",
    "two-graph-36",
    "ex415",
    "paley-Q",
    "dynkin-D",
    "tensor-D",
    "larges-I-V[-J]",
    "conference-N",
    "triangular-M",
    "all-plus-N",
    "neg:NAME",
    "deleteC:NAME",
];

#[derive(Clone, Debug)]
pub struct Built {
    pub name: String,
    pub seidel: SeidelMatrix,
    pub spectrum: Option<Spectrum>,
    pub lines: Option<LineSystem>,
    /// Embedding dimension at the smallest eigenvalue.
    pub dimension: usize,
}

fn param<T: std::str::FromStr>(name: &str, s: Option<&str>) -> Result<T, ConstructionError> {
    s.and_then(|x| x.parse().ok()).ok_or_else(|| ConstructionError::Unknown(name.to_string()))
}

fn from_lines(name: &str, lines: LineSystem, spectrum: Option<Spectrum>) -> Built {
    let dimension = lines.rank();
    Built { name: name.to_string(), seidel: lines.seidel(), spectrum, lines: Some(lines), dimension }
}

fn from_seidel(name: &str, seidel: SeidelMatrix, spectrum: Option<Spectrum>) -> Result<Built, ConstructionError> {
    let spectrum = match spectrum {
        Some(s) => Some(s),
        None => exact_spectrum(&seidel),
    };
    let dimension = match &spectrum {
        Some(spec) => spec.order() - spec.smallest().map_or(0, |l| spec.multiplicity(&l)),
        None => seidel.n(),
    };
    Ok(Built { name: name.to_string(), seidel, spectrum, lines: None, dimension })
}

/// Builds and certifies the named construction.
///
/// `neg:NAME` negates a Seidel matrix; `deleteC:NAME` removes a switching
/// `C`-clique found by search.
pub fn build(name: &str) -> Result<Built, ConstructionError> {
    if let Some((modifier, inner)) = name.split_once(':') {
        let base = build(inner)?;
        let seidel = if modifier == "neg" {
            base.seidel.negated()
        } else {
            let c: usize = param(name, modifier.strip_prefix("delete"))?;
            let clique = find_switching_clique(&base.seidel, c).ok_or(ConstructionError::CliqueNotFound(c))?;
            delete_clique(&base.seidel, &clique)?
        };
        return from_seidel(name, seidel, None);
    }
    let mut parts = name.split('-');
    let head = if name == "two-graph-36" { name } else { parts.next().unwrap_or_default() };
    let unknown = || ConstructionError::Unknown(name.to_string());
    match head {
        "netto" => {
            let ls = netto_sts19_system()?;
            let spec = ls.certify(&netto_spectrum())?;
            Ok(from_lines(name, ls, Some(spec)))
        }
        "witt" => {
            let ls = witt_asch_system()?;
            let spec = ls.certify(&witt_spectrum())?;
            Ok(from_lines(name, ls, Some(spec)))
        }
        "hadamard16" => {
            let ls = hadamard16_system()?;
            let spec = ls.certify(&Spectrum::from_ints(&[(-5, 6), (3, 10)]))?;
            Ok(from_lines(name, ls, Some(spec)))
        }
        "srg40" => {
            let g = symplectic_srg40();
            let spec = crate::spectra::certify_spectrum(&g.seidel(), &Spectrum::from_ints(&[(-5, 24), (7, 15), (15, 1)]))?;
            from_seidel(name, g.seidel(), Some(spec))
        }
        "two-graph-36" => {
            parts.by_ref().for_each(drop);
            let s = regular_two_graph_36()?;
            from_seidel(name, s, Some(Spectrum::from_ints(&[(-5, 21), (7, 15)])))
        }
        "ex415" => {
            let e = ex415_system()?;
            let dimension = e.lines.rank();
            Ok(Built { name: name.to_string(), seidel: e.seidel, spectrum: Some(e.spectrum), lines: Some(e.lines), dimension })
        }
        "paley" => from_seidel(name, paley(param(name, parts.next())?)?, None),
        "dynkin" => {
            let (s, _) = dynkin_triangles(param(name, parts.next())?)?;
            from_seidel(name, s, None)
        }
        "tensor" => {
            let d: usize = param(name, parts.next())?;
            if d < 5 || d % 2 == 0 {
                return Err(ConstructionError::BadDimension(d));
            }
            let (s, spec) = tensor_blowup(&SeidelMatrix::all_plus((d - 1) / 2), 3)?;
            from_seidel(name, s, Some(spec))
        }
        "conference" => from_seidel(name, conference(param(name, parts.next())?)?, None),
        "triangular" => {
            let (s, spec) = triangular(param(name, parts.next())?)?;
            from_seidel(name, s, Some(spec))
        }
        "all" if parts.next() == Some("plus") => from_seidel(name, SeidelMatrix::all_plus(param(name, parts.next())?), None),
        "larges" => {
            let i: u32 = param(name, parts.next())?;
            let variant: LargesVariant = param(name, parts.next())?;
            let j: usize = match parts.next() {
                Some(x) => param(name, Some(x))?,
                None => 0,
            };
            Ok(from_lines(name, larges_construction(i, variant, j)?, None))
        }
        _ => Err(unknown()),
    }
    .and_then(|b| if parts.next().is_some() { Err(unknown()) } else { Ok(b) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_entries_build() {
        for (name, n, d) in [
            ("netto", 48, 17),
            ("hadamard16", 16, 10),
            ("srg40", 40, 16),
            ("two-graph-36", 36, 15),
            ("paley-13", 13, 7),
            ("dynkin-8", 10, 8),
            ("tensor-9", 12, 9),
            ("larges-2-a", 144, 25),
            ("conference-6", 6, 3),
            ("triangular-8", 28, 7),
            ("neg:all-plus-3", 3, 2),
            ("neg:hadamard16", 16, 6),
            ("delete6:conference-26", 20, 12),
        ] {
            let b = build(name).unwrap();
            assert_eq!((b.seidel.n(), b.dimension), (n, d), "{name}");
        }
    }

    #[test]
    fn bad_names() {
        for name in ["nope", "paley", "paley-x", "paley-13-1", "two-graph", "all-minus-3", "deletex:netto"] {
            assert!(build(name).is_err(), "{name}");
        }
    }
}
