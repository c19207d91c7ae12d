//! File formats: OFF meshes in, vertex-function tables in, legacy-ASCII
//! VTK unstructured grids and JSON analysis reports out.
//!
//! Parsers are line-based and report the 1-based line number of the first
//! problem. OFF face records are treated as maximal simplices (1 to 4
//! vertices); their faces are filled in automatically, and vertices not
//! referenced by any record are appended as isolated vertices.

use crate::complex::{ComplexError, SimplexId, SimplicialComplex};
use crate::filtration::AdmissibleFunction;
use crate::homology::HomologySummary;
use crate::mdm::MdmFunction;
use crate::pareto::{CriticalComponents, ParetoSet};
use crate::vector_field::DiscreteVectorField;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};
use thiserror::Error;

/// Errors from reading or writing files.
#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("simplices of dimension {0} cannot be exported (vertices through tetrahedra only)")]
    UnsupportedDimension(usize),
    #[error("complex references vertex {vertex} but only {points} points were given")]
    MissingPoint { vertex: usize, points: usize },
    #[error("cell array '{name}' has {got} values for {expected} cells")]
    ArrayLengthMismatch {
        name: String,
        expected: usize,
        got: usize,
    },
}

fn parse_err(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        message: message.into(),
    }
}

/// Contents of an OFF file: coordinates and face records, in file order,
/// with vertex numbering as in the file.
#[derive(Clone, Debug, PartialEq)]
pub struct MeshFile {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
}

/// Reads an OFF mesh. Accepts an optional leading `OFF` keyword (alone or
/// followed by the counts), `#` comments, and blank lines; face records
/// may carry trailing color values, which are ignored.
pub fn read_off<R: BufRead>(reader: R) -> Result<MeshFile, IoError> {
    // Meaningful lines with their 1-based numbers.
    let mut lines: Vec<(usize, Vec<String>)> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.split('#').next().unwrap_or("").trim().to_string();
        if text.is_empty() {
            continue;
        }
        lines.push((i + 1, text.split_whitespace().map(String::from).collect()));
    }
    let mut at = 0;
    let mut counts_tokens: &[String] = &[];
    let mut counts_line = 0;
    if let Some((line, tokens)) = lines.first() {
        if tokens[0] == "OFF" {
            if tokens.len() > 1 {
                counts_tokens = &tokens[1..];
                counts_line = *line;
            }
            at = 1;
        }
    }
    if counts_tokens.is_empty() {
        let (line, tokens) = lines
            .get(at)
            .ok_or_else(|| parse_err(0, "missing the vertex/face/edge count line"))?;
        counts_tokens = tokens;
        counts_line = *line;
        at += 1;
    }
    if counts_tokens.len() < 2 {
        return Err(parse_err(
            counts_line,
            "expected vertex, face and edge counts",
        ));
    }
    let parse_count = |tok: &String| -> Result<usize, IoError> {
        tok.parse()
            .map_err(|_| parse_err(counts_line, format!("'{tok}' is not a count")))
    };
    let nv = parse_count(&counts_tokens[0])?;
    let nf = parse_count(&counts_tokens[1])?;

    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (line, tokens) = lines
            .get(at)
            .ok_or_else(|| parse_err(0, format!("expected {nv} vertex lines")))?;
        at += 1;
        if tokens.len() < 3 {
            return Err(parse_err(*line, "expected three coordinates"));
        }
        let mut p = [0.0; 3];
        for (slot, tok) in p.iter_mut().zip(tokens) {
            *slot = tok
                .parse()
                .map_err(|_| parse_err(*line, format!("'{tok}' is not a coordinate")))?;
        }
        vertices.push(p);
    }

    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (line, tokens) = lines
            .get(at)
            .ok_or_else(|| parse_err(0, format!("expected {nf} face lines")))?;
        at += 1;
        let size: usize = tokens[0]
            .parse()
            .map_err(|_| parse_err(*line, format!("'{}' is not a face size", tokens[0])))?;
        if !(1..=4).contains(&size) {
            return Err(parse_err(
                *line,
                format!("face with {size} vertices is not a simplex of dimension <= 3"),
            ));
        }
        if tokens.len() < 1 + size {
            return Err(parse_err(*line, format!("expected {size} vertex indices")));
        }
        let mut face = Vec::with_capacity(size);
        for tok in &tokens[1..=size] {
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(*line, format!("'{tok}' is not a vertex index")))?;
            if v >= nv {
                return Err(parse_err(
                    *line,
                    format!("vertex index {v} out of range (file has {nv} vertices)"),
                ));
            }
            face.push(v);
        }
        faces.push(face);
    }
    Ok(MeshFile { vertices, faces })
}

/// Builds the simplicial complex of a mesh: face records are inserted in
/// file order (each bringing its faces with it), then vertices untouched
/// by any record are appended in numbering order.
pub fn build_complex(mesh: &MeshFile) -> Result<(SimplicialComplex, Vec<[f64; 3]>), IoError> {
    let mut k = SimplicialComplex::new();
    for face in &mesh.faces {
        k.insert_simplex(face)?;
    }
    for v in 0..mesh.vertices.len() {
        if k.id_of(&[v]).is_none() {
            k.insert_simplex(&[v])?;
        }
    }
    Ok((k, mesh.vertices.clone()))
}

/// Contents of a vertex-function table: one comma-separated row of `k`
/// values per vertex, in vertex-numbering order.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexFunctionFile {
    pub k: usize,
    /// Row-major values, `k` per vertex.
    pub rows: Vec<f64>,
}

impl VertexFunctionFile {
    /// Number of vertex rows.
    pub fn len(&self) -> usize {
        self.rows.len() / self.k
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Reads a comma-separated vertex-function table. `#` comments and blank
/// lines are skipped; every data row must have the same number of values.
pub fn read_vertex_function<R: BufRead>(reader: R) -> Result<VertexFunctionFile, IoError> {
    let mut k = 0;
    let mut rows = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let values: Vec<&str> = text.split(',').map(str::trim).collect();
        if k == 0 {
            k = values.len();
        } else if values.len() != k {
            return Err(parse_err(
                i + 1,
                format!("row has {} values, previous rows had {k}", values.len()),
            ));
        }
        for tok in values {
            let v: f64 = tok
                .parse()
                .map_err(|_| parse_err(i + 1, format!("'{tok}' is not a number")))?;
            rows.push(v);
        }
    }
    if k == 0 {
        return Err(parse_err(0, "no data rows"));
    }
    Ok(VertexFunctionFile { k, rows })
}

/// One per-cell data column of a VTK export.
#[derive(Clone, Debug, PartialEq)]
pub enum CellArray {
    Int { name: String, values: Vec<i64> },
    Double { name: String, values: Vec<f64> },
}

impl CellArray {
    pub fn name(&self) -> &str {
        match self {
            CellArray::Int { name, .. } | CellArray::Double { name, .. } => name,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            CellArray::Int { values, .. } => values.len(),
            CellArray::Double { values, .. } => values.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Writes a complex as a legacy-ASCII VTK unstructured grid: every
/// simplex becomes one cell (types 1, 3, 5, 10 for dimensions 0 through
/// 3), followed by the given per-cell data arrays.
pub fn write_vtk<W: Write>(
    mut w: W,
    title: &str,
    complex: &SimplicialComplex,
    points: &[[f64; 3]],
    arrays: &[CellArray],
) -> Result<(), IoError> {
    for v in complex.ids_of_dim(0) {
        let vertex = complex.vertices_of(v)[0];
        if vertex >= points.len() {
            return Err(IoError::MissingPoint {
                vertex,
                points: points.len(),
            });
        }
    }
    if let Some(dim) = complex.dim() {
        if dim > 3 {
            return Err(IoError::UnsupportedDimension(dim));
        }
    }
    let n = complex.len();
    for a in arrays {
        if a.len() != n {
            return Err(IoError::ArrayLengthMismatch {
                name: a.name().to_string(),
                expected: n,
                got: a.len(),
            });
        }
    }
    let title: String = title.replace(['\n', '\r'], " ");
    writeln!(w, "# vtk DataFile Version 3.0")?;
    writeln!(w, "{title}")?;
    writeln!(w, "ASCII")?;
    writeln!(w, "DATASET UNSTRUCTURED_GRID")?;
    writeln!(w, "POINTS {} double", points.len())?;
    for p in points {
        writeln!(w, "{} {} {}", p[0], p[1], p[2])?;
    }
    let total: usize = complex.ids().map(|s| 2 + complex.dim_of(s)).sum();
    writeln!(w, "CELLS {n} {total}")?;
    for s in complex.ids() {
        let vs = complex.vertices_of(s);
        write!(w, "{}", vs.len())?;
        for v in vs {
            write!(w, " {v}")?;
        }
        writeln!(w)?;
    }
    writeln!(w, "CELL_TYPES {n}")?;
    for s in complex.ids() {
        writeln!(w, "{}", [1, 3, 5, 10][complex.dim_of(s)])?;
    }
    if !arrays.is_empty() {
        writeln!(w, "CELL_DATA {n}")?;
        for a in arrays {
            match a {
                CellArray::Int { name, values } => {
                    writeln!(w, "SCALARS {name} int 1")?;
                    writeln!(w, "LOOKUP_TABLE default")?;
                    for v in values {
                        writeln!(w, "{v}")?;
                    }
                }
                CellArray::Double { name, values } => {
                    writeln!(w, "SCALARS {name} double 1")?;
                    writeln!(w, "LOOKUP_TABLE default")?;
                    for v in values {
                        writeln!(w, "{v}")?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Per-cell criticality index: the dimension for a critical simplex, -1
/// for a regular (paired) one.
pub fn criticality_array(complex: &SimplicialComplex, field: &DiscreteVectorField) -> CellArray {
    CellArray::Int {
        name: "criticality".into(),
        values: (0..field.len())
            .map(|i| {
                let s = SimplexId(i);
                if field.is_critical(s) {
                    complex.dim_of(s) as i64
                } else {
                    -1
                }
            })
            .collect(),
    }
}

/// Per-cell partner ids: the pairing partner's cell id, or -1 for a
/// critical cell.
pub fn pair_cell_array(field: &DiscreteVectorField) -> CellArray {
    CellArray::Int {
        name: "pair_cell".into(),
        values: (0..field.len())
            .map(|i| field.partner(SimplexId(i)).map_or(-1, |p| p.index() as i64))
            .collect(),
    }
}

/// One double column per component of an input function, named
/// `{prefix}_1` through `{prefix}_k`.
pub fn admissible_function_arrays(prefix: &str, f: &AdmissibleFunction) -> Vec<CellArray> {
    (0..f.k())
        .map(|i| CellArray::Double {
            name: format!("{prefix}_{}", i + 1),
            values: (0..f.len()).map(|s| f.component(SimplexId(s), i)).collect(),
        })
        .collect()
}

/// One double column per component of a Morse function's realized values,
/// named `{prefix}_1` through `{prefix}_k`.
pub fn mdm_function_arrays(prefix: &str, g: &MdmFunction) -> Vec<CellArray> {
    (0..g.k())
        .map(|i| CellArray::Double {
            name: format!("{prefix}_{}", i + 1),
            values: (0..g.len()).map(|s| g.realized(SimplexId(s))[i]).collect(),
        })
        .collect()
}

/// Membership flags and component indices of a Pareto set: `pareto` is
/// 0/1, `pareto_component` is the component index or -1.
pub fn pareto_arrays(ps: &ParetoSet, cells: usize) -> Vec<CellArray> {
    vec![
        CellArray::Int {
            name: "pareto".into(),
            values: (0..cells)
                .map(|i| i64::from(ps.contains(SimplexId(i))))
                .collect(),
        },
        CellArray::Int {
            name: "pareto_component".into(),
            values: (0..cells)
                .map(|i| ps.component_of(SimplexId(i)).map_or(-1, |c| c as i64))
                .collect(),
        },
    ]
}

/// Class indices of critical components: the class index for critical
/// cells, -1 elsewhere.
pub fn component_array(cc: &CriticalComponents, cells: usize) -> CellArray {
    CellArray::Int {
        name: "component".into(),
        values: (0..cells)
            .map(|i| cc.class_of(SimplexId(i)).map_or(-1, |c| c as i64))
            .collect(),
    }
}

/// The JSON report printed by the command-line tool: a fixed schema tag,
/// basic complex statistics, and whichever analysis sections were run.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    /// Simplices per dimension.
    pub simplex_counts: Vec<usize>,
    pub euler_characteristic: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ring: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub betti: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub torsion: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<f64>,
    /// Number of distinct function values |f(K)|.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub levels: Option<usize>,
    /// Largest level-set size, max |L_u|.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub morse_counts: Option<Vec<usize>>,
    /// Critical simplices as a percentage of each dimension's count.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub critical_percent: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub critical_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub admissible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub already_morse: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub relative_perfect: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pareto_simplices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pareto_components: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub relation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub class_sizes: Option<Vec<usize>>,
}

impl AnalysisReport {
    /// A report covering just the complex itself (schema 1).
    pub fn new(complex: &SimplicialComplex) -> Self {
        let counts: Vec<usize> = match complex.dim() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|p| complex.count_of_dim(p)).collect(),
        };
        let euler = counts
            .iter()
            .enumerate()
            .map(|(p, &c)| if p % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        Self {
            schema: 1,
            simplex_counts: counts,
            euler_characteristic: euler,
            ..Self::default()
        }
    }

    /// Records per-dimension critical counts along with their total and
    /// the percentage of each dimension's simplices that are critical.
    pub fn set_morse_counts(&mut self, counts: Vec<usize>) {
        self.critical_count = Some(counts.iter().sum());
        self.critical_percent = Some(
            counts
                .iter()
                .zip(&self.simplex_counts)
                .map(|(&m, &n)| {
                    if n == 0 {
                        0.0
                    } else {
                        100.0 * m as f64 / n as f64
                    }
                })
                .collect(),
        );
        self.morse_counts = Some(counts);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The torsion coefficients of a homology summary as plain integers, for
/// the JSON report.
pub fn torsion_as_u64(h: &HomologySummary) -> Vec<Vec<u64>> {
    h.torsion
        .iter()
        .map(|per_dim| {
            per_dim
                .iter()
                .map(|d| d.to_u64().expect("torsion coefficient fits in 64 bits"))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::IndexingMap;
    use crate::fixtures;
    use crate::mdm::generate_mdm;
    use std::io::Cursor;

    fn off(text: &str) -> Result<MeshFile, IoError> {
        read_off(Cursor::new(text))
    }

    #[test]
    fn off_reads_header_counts_vertices_faces() {
        let text = "OFF\n# a square made of two triangles\n4 2 5\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n3 0 1 3\n3 0 2 3\n";
        let mesh = off(text).unwrap();
        assert_eq!(mesh.vertices.len(), 4);
        assert_eq!(mesh.faces, vec![vec![0, 1, 3], vec![0, 2, 3]]);
        let (k, coords) = build_complex(&mesh).unwrap();
        assert_eq!(k.len(), 11);
        assert_eq!(coords.len(), 4);
        // Counts may share the header line, and the keyword may be absent.
        let same = off("OFF 4 2 5\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n3 0 1 3\n3 0 2 3\n").unwrap();
        assert_eq!(same, mesh);
        let same = off("4 2 5\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n3 0 1 3\n3 0 2 3\n").unwrap();
        assert_eq!(same, mesh);
    }

    #[test]
    fn off_supports_edge_and_vertex_records_and_isolated_vertices() {
        // Three vertices, one edge record; vertex 2 is referenced by no
        // face and must be appended as an isolated vertex.
        let mesh = off("OFF\n3 1 0\n0 0 0\n1 0 0\n2 0 0\n2 0 1\n").unwrap();
        let (k, _) = build_complex(&mesh).unwrap();
        assert_eq!(k.count_of_dim(0), 3);
        assert_eq!(k.count_of_dim(1), 1);
        // Insertion order: the edge record first (with its endpoints),
        // then the leftover vertex.
        assert_eq!(k.id_of(&[2]), Some(SimplexId(3)));
    }

    #[test]
    fn off_errors_carry_line_numbers() {
        let err = off("OFF\n4 2 5\n0 0 0\n").unwrap_err();
        assert!(err.to_string().contains("vertex lines"), "{err}");

        let err = off("OFF\nnope 2 5\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");

        let err = off("OFF\n3 1 0\n0 0 0\n1 0 0\nbad 0 0\n").unwrap_err();
        assert!(err.to_string().contains("line 5"), "{err}");

        let err = off("OFF\n3 1 0\n0 0 0\n1 0 0\n2 0 0\n3 0 1 7\n").unwrap_err();
        assert!(err.to_string().contains("line 6"), "{err}");
        assert!(err.to_string().contains("out of range"), "{err}");

        let err = off("OFF\n5 1 0\n0 0 0\n1 0 0\n2 0 0\n3 0 0\n4 0 0\n5 0 1 2 3 4\n").unwrap_err();
        assert!(err.to_string().contains("not a simplex"), "{err}");
    }

    #[test]
    fn build_complex_rejects_repeated_vertices_in_a_face() {
        let mesh = MeshFile {
            vertices: vec![[0.0; 3], [1.0, 0.0, 0.0]],
            faces: vec![vec![0, 0, 1]],
        };
        assert!(matches!(
            build_complex(&mesh),
            Err(IoError::Complex(ComplexError::DuplicateVertex { .. }))
        ));
    }

    #[test]
    fn vertex_function_table_parses_and_reports_ragged_rows() {
        let table = read_vertex_function(Cursor::new("# two components\n1, 2\n3, 4\n")).unwrap();
        assert_eq!(table.k, 2);
        assert_eq!(table.len(), 2);
        assert_eq!(table.rows, vec![1.0, 2.0, 3.0, 4.0]);

        let err = read_vertex_function(Cursor::new("1, 2\n3\n")).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");

        let err = read_vertex_function(Cursor::new("1, x\n")).unwrap_err();
        assert!(err.to_string().contains("'x'"), "{err}");

        let err = read_vertex_function(Cursor::new("# only comments\n")).unwrap_err();
        assert!(err.to_string().contains("no data rows"), "{err}");
    }

    #[test]
    fn vtk_output_of_a_triangle_matches_the_expected_text() {
        let mut k = SimplicialComplex::new();
        k.insert_simplex(&[0, 1, 2]).unwrap();
        let points = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]];
        let flags = CellArray::Int {
            name: "flag".into(),
            values: vec![0, 0, 0, 1, 1, 1, 2],
        };
        let mut out = Vec::new();
        write_vtk(&mut out, "triangle", &k, &points, &[flags]).unwrap();
        let expected = "\
# vtk DataFile Version 3.0
triangle
ASCII
DATASET UNSTRUCTURED_GRID
POINTS 3 double
0 0 0
1 0 0
0 1 0
CELLS 7 19
1 0
1 1
2 0 1
1 2
2 0 2
2 1 2
3 0 1 2
CELL_TYPES 7
1
1
3
1
3
3
5
CELL_DATA 7
SCALARS flag int 1
LOOKUP_TABLE default
0
0
0
1
1
1
2
";
        assert_eq!(String::from_utf8(out).unwrap(), expected);
    }

    #[test]
    fn vtk_rejects_mismatched_inputs() {
        let mut k = SimplicialComplex::new();
        k.insert_simplex(&[0, 1]).unwrap();
        let mut out = Vec::new();
        // Too few points for the referenced vertices.
        let err = write_vtk(&mut out, "t", &k, &[[0.0; 3]], &[]).unwrap_err();
        assert!(matches!(err, IoError::MissingPoint { vertex: 1, .. }));
        // Wrong array length.
        let bad = CellArray::Int {
            name: "x".into(),
            values: vec![1],
        };
        let err = write_vtk(&mut out, "t", &k, &[[0.0; 3], [1.0, 0.0, 0.0]], &[bad]).unwrap_err();
        assert!(matches!(err, IoError::ArrayLengthMismatch { .. }));
    }

    #[test]
    fn circle_export_flags_twelve_critical_cells() {
        let (k, coords) = fixtures::circle_complex();
        let f = fixtures::circle_xy_function(&k, &coords);
        let index = IndexingMap::insertion_order(&k);
        let (g, field, _) = generate_mdm(&k, &f, &index, 0.5).unwrap();
        let crit = criticality_array(&k, &field);
        let CellArray::Int { values, .. } = &crit else {
            panic!("criticality is an integer array")
        };
        // Six critical vertices (index 0), six critical edges (index 1),
        // twelve regular cells (index -1).
        assert_eq!(values.iter().filter(|&&v| v == 0).count(), 6);
        assert_eq!(values.iter().filter(|&&v| v == 1).count(), 6);
        assert_eq!(values.iter().filter(|&&v| v == -1).count(), 12);
        let mut arrays = vec![crit.clone(), pair_cell_array(&field)];
        arrays.extend(admissible_function_arrays("f", &f));
        arrays.extend(mdm_function_arrays("g", &g));
        let mut out = Vec::new();
        write_vtk(&mut out, "circle", &k, &coords, &arrays).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("CELLS 24 60"));
        assert!(text.contains("SCALARS criticality int 1"));
        assert!(text.contains("SCALARS g_2 double 1"));
    }

    #[test]
    fn analysis_report_serializes_sparsely() {
        let mut k = SimplicialComplex::new();
        k.insert_simplex(&[0, 1, 2]).unwrap();
        let mut report = AnalysisReport::new(&k);
        assert_eq!(report.schema, 1);
        assert_eq!(report.simplex_counts, vec![3, 3, 1]);
        assert_eq!(report.euler_characteristic, 1);
        let text = report.to_json();
        assert!(text.contains("\"schema\": 1"));
        assert!(!text.contains("betti"), "absent sections must be omitted");
        report.betti = Some(vec![1, 0, 0]);
        let text = report.to_json();
        assert!(text.contains("betti"));
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}
