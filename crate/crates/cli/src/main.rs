//! Command-line front end: reads OFF meshes and comma-separated function
//! tables, runs the Morse construction and homology analyses from the
//! core library, prints a JSON report, and optionally writes annotated
//! VTK grids.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mdm_core::io::{
    admissible_function_arrays, build_complex, component_array, criticality_array,
    mdm_function_arrays, pair_cell_array, pareto_arrays, read_off, read_vertex_function,
    torsion_as_u64, write_vtk, AnalysisReport, CellArray,
};
use mdm_core::{
    axis_indexing_map, critical_components, generate_mdm, gradient_of, level_sets, max_extension,
    morse_count_check, pareto_set, relative_homology, rips_diameter_map, verify_mdm,
    AdmissibleFunction, Axis, AxisDirection, FiltrationError, HomologySummary, IndexingMap,
    MdmFunction, Relation, Ring, SimplexSet, SimplicialComplex,
};
use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "mdm",
    version,
    about = "Multiparameter discrete Morse functions and gradient fields on simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a Morse function and gradient field for a mesh
    Generate(GenerateArgs),
    /// Report Betti numbers (and torsion over the integers)
    Betti(BettiArgs),
    /// Compute the Pareto set of a function on a mesh
    Pareto(ParetoArgs),
    /// Group the critical simplices of the constructed field into components
    Components(ComponentsArgs),
    /// Validate a function: admissibility, Morse conditions, field extraction
    Check(CheckArgs),
}

/// Where the input function comes from. Without any of these flags the
/// commands that allow it fall back to the constant zero map.
#[derive(Args)]
struct FuncArgs {
    /// Comma-separated values: one row per vertex (extended by maxima)
    /// or one row per simplex in cell-id order (taken verbatim)
    #[arg(long, value_name = "CSV", conflicts_with_all = ["axes", "rips"])]
    func: Option<PathBuf>,
    /// A built-in function of the embedding: a coordinate pair extended
    /// by maxima, or the constant zero map
    #[arg(long, value_enum, value_name = "WHICH", conflicts_with = "rips")]
    axes: Option<AxesChoice>,
    /// The pairwise-diameter function of the embedded vertices
    #[arg(long)]
    rips: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxesChoice {
    Xy,
    Xz,
    Yz,
    Const0,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexChoice {
    /// The order in which the mesh file introduced the cells
    Insertion,
    #[value(name = "x+")]
    XUp,
    #[value(name = "x-")]
    XDown,
    #[value(name = "y+")]
    YUp,
    #[value(name = "y-")]
    YDown,
    #[value(name = "z+")]
    ZUp,
    #[value(name = "z-")]
    ZDown,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingChoice {
    /// Integer coefficients (Smith normal form; torsion reported)
    Z,
    /// Two-element-field coefficients (bitset elimination)
    Z2,
}

impl From<RingChoice> for Ring {
    fn from(c: RingChoice) -> Ring {
        match c {
            RingChoice::Z => Ring::Z,
            RingChoice::Z2 => Ring::Z2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationChoice {
    /// Equal Morse-value component and joined by faces or gradient paths
    G,
    /// Equal input-value component and joined by faces or gradient paths
    Gprime,
    /// Equal input-value component and touching fiber components
    F,
}

impl From<RelationChoice> for Relation {
    fn from(c: RelationChoice) -> Relation {
        match c {
            RelationChoice::G => Relation::SimG,
            RelationChoice::Gprime => Relation::SimGPrime,
            RelationChoice::F => Relation::SimF,
        }
    }
}

#[derive(Args)]
struct GenerateArgs {
    /// Input mesh (ASCII OFF)
    mesh: PathBuf,
    #[command(flatten)]
    func: FuncArgs,
    /// Perturbation budget: the constructed function stays within eps of
    /// the input in every coordinate
    #[arg(long, default_value_t = 1e-3)]
    eps: f64,
    /// Processing order for ties inside a level set
    #[arg(long, value_enum, default_value = "insertion")]
    index: IndexChoice,
    /// Also compute Betti numbers and the per-level perfectness table
    #[arg(long)]
    betti: bool,
    /// Coefficients for the homology sections
    #[arg(long, value_enum, default_value = "z")]
    ring: RingChoice,
    /// Write an annotated VTK grid here
    #[arg(long, value_name = "VTK")]
    out: Option<PathBuf>,
    /// Write the JSON report here as well as to stdout
    #[arg(long, value_name = "JSON")]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct BettiArgs {
    /// Input mesh (ASCII OFF)
    mesh: PathBuf,
    /// Homology coefficients
    #[arg(long, value_enum, default_value = "z")]
    ring: RingChoice,
    /// Write the JSON report here as well as to stdout
    #[arg(long, value_name = "JSON")]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct ParetoArgs {
    /// Input mesh (ASCII OFF)
    mesh: PathBuf,
    #[command(flatten)]
    func: FuncArgs,
    /// Coefficients for the relative-homology test
    #[arg(long, value_enum, default_value = "z")]
    ring: RingChoice,
    /// Write an annotated VTK grid here
    #[arg(long, value_name = "VTK")]
    out: Option<PathBuf>,
    /// Write the JSON report here as well as to stdout
    #[arg(long, value_name = "JSON")]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct ComponentsArgs {
    /// Input mesh (ASCII OFF)
    mesh: PathBuf,
    #[command(flatten)]
    func: FuncArgs,
    /// Perturbation budget for the construction
    #[arg(long, default_value_t = 1e-3)]
    eps: f64,
    /// Processing order for ties inside a level set
    #[arg(long, value_enum, default_value = "insertion")]
    index: IndexChoice,
    /// Which equivalence relation groups the critical simplices
    #[arg(long, value_enum, default_value = "g")]
    relation: RelationChoice,
    /// Write an annotated VTK grid here
    #[arg(long, value_name = "VTK")]
    out: Option<PathBuf>,
    /// Write the JSON report here as well as to stdout
    #[arg(long, value_name = "JSON")]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Input mesh (ASCII OFF)
    mesh: PathBuf,
    #[command(flatten)]
    func: FuncArgs,
    /// Write the JSON report here as well as to stdout
    #[arg(long, value_name = "JSON")]
    report: Option<PathBuf>,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Generate(a) => run_generate(a),
        Command::Betti(a) => run_betti(a),
        Command::Pareto(a) => run_pareto(a),
        Command::Components(a) => run_components(a),
        Command::Check(a) => run_check(a),
    }
}

fn load_mesh(path: &Path) -> Result<(SimplicialComplex, Vec<[f64; 3]>)> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let mesh =
        read_off(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))?;
    let pair = build_complex(&mesh).with_context(|| format!("building {}", path.display()))?;
    Ok(pair)
}

/// Resolves the function flags against a mesh. `required` commands refuse
/// to fall back to the constant zero map.
fn load_function(
    complex: &SimplicialComplex,
    coords: &[[f64; 3]],
    args: &FuncArgs,
    required: bool,
) -> Result<AdmissibleFunction> {
    if let Some(path) = &args.func {
        let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
        let table = read_vertex_function(BufReader::new(file))
            .with_context(|| format!("reading {}", path.display()))?;
        let vertices = complex.count_of_dim(0);
        if table.len() == complex.len() {
            return Ok(AdmissibleFunction::from_values(
                complex, table.k, table.rows,
            )?);
        }
        if table.len() == vertices {
            return Ok(max_extension(complex, table.k, &table.rows)?);
        }
        bail!(
            "{} has {} rows; expected one per vertex ({vertices}) or one per cell ({})",
            path.display(),
            table.len(),
            complex.len()
        );
    }
    if args.rips {
        return Ok(rips_diameter_map(complex, coords)?);
    }
    let axes = match args.axes {
        Some(a) => a,
        None if required => {
            bail!("this command needs a function: pass --func, --axes or --rips")
        }
        None => AxesChoice::Const0,
    };
    let (k, rows): (usize, Vec<f64>) = match axes {
        AxesChoice::Xy => (2, coords.iter().flat_map(|p| [p[0], p[1]]).collect()),
        AxesChoice::Xz => (2, coords.iter().flat_map(|p| [p[0], p[2]]).collect()),
        AxesChoice::Yz => (2, coords.iter().flat_map(|p| [p[1], p[2]]).collect()),
        AxesChoice::Const0 => (1, vec![0.0; coords.len()]),
    };
    Ok(max_extension(complex, k, &rows)?)
}

fn build_index(
    complex: &SimplicialComplex,
    coords: &[[f64; 3]],
    choice: IndexChoice,
) -> Result<IndexingMap> {
    let axis = |a, d| Ok(axis_indexing_map(complex, coords, a, d)?);
    match choice {
        IndexChoice::Insertion => Ok(IndexingMap::insertion_order(complex)),
        IndexChoice::XUp => axis(Axis::X, AxisDirection::Increasing),
        IndexChoice::XDown => axis(Axis::X, AxisDirection::Decreasing),
        IndexChoice::YUp => axis(Axis::Y, AxisDirection::Increasing),
        IndexChoice::YDown => axis(Axis::Y, AxisDirection::Decreasing),
        IndexChoice::ZUp => axis(Axis::Z, AxisDirection::Increasing),
        IndexChoice::ZDown => axis(Axis::Z, AxisDirection::Decreasing),
    }
}

/// Absolute homology with torsion: the relative homology of the full
/// complex against the empty exit set.
fn full_homology(complex: &SimplicialComplex, ring: Ring) -> HomologySummary {
    let all: SimplexSet = complex.ids().collect();
    relative_homology(complex, &all, ring).expect("the full complex is face-convex")
}

fn ring_report(report: &mut AnalysisReport, h: &HomologySummary) {
    report.ring = Some(h.ring.to_string());
    report.betti = Some(h.betti.clone());
    if h.ring == Ring::Z {
        report.torsion = Some(torsion_as_u64(h));
    }
}

/// Prints the report to stdout and copies it to the requested file.
fn emit(report: &AnalysisReport, path: Option<&Path>) -> Result<()> {
    let text = report.to_json();
    println!("{text}");
    if let Some(p) = path {
        std::fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn write_grid(
    path: &Path,
    title: &str,
    complex: &SimplicialComplex,
    coords: &[[f64; 3]],
    arrays: &[CellArray],
) -> Result<()> {
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    write_vtk(BufWriter::new(file), title, complex, coords, arrays)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn run_generate(a: GenerateArgs) -> Result<()> {
    let (complex, coords) = load_mesh(&a.mesh)?;
    let f = load_function(&complex, &coords, &a.func, false)?;
    let index = build_index(&complex, &coords, a.index)?;
    let (g, field, _) = generate_mdm(&complex, &f, &index, a.eps)?;
    let levels = level_sets(&complex, &f);

    let mut report = AnalysisReport::new(&complex);
    report.eps = Some(a.eps);
    report.delta = Some(g.delta());
    report.levels = Some(levels.len());
    report.lambda = Some(levels.max_level_size());
    report.set_morse_counts(field.morse_counts(&complex));
    report.max_deviation = Some(g.max_deviation(&f));
    if a.betti {
        let ring = a.ring.into();
        ring_report(&mut report, &full_homology(&complex, ring));
        let table = morse_count_check(&complex, &levels, &field, ring)?;
        report.relative_perfect = Some(table.relative_perfect());
    }
    if let Some(out) = &a.out {
        let mut arrays = vec![criticality_array(&complex, &field), pair_cell_array(&field)];
        arrays.extend(admissible_function_arrays("f", &f));
        arrays.extend(mdm_function_arrays("g", &g));
        write_grid(out, "generated Morse function", &complex, &coords, &arrays)?;
    }
    emit(&report, a.report.as_deref())
}

fn run_betti(a: BettiArgs) -> Result<()> {
    let (complex, _) = load_mesh(&a.mesh)?;
    let mut report = AnalysisReport::new(&complex);
    ring_report(&mut report, &full_homology(&complex, a.ring.into()));
    emit(&report, a.report.as_deref())
}

fn run_pareto(a: ParetoArgs) -> Result<()> {
    let (complex, coords) = load_mesh(&a.mesh)?;
    let f = load_function(&complex, &coords, &a.func, true)?;
    let ring = a.ring.into();
    let ps = pareto_set(&complex, &f, ring);

    let mut report = AnalysisReport::new(&complex);
    report.ring = Some(ring.to_string());
    report.pareto_simplices = Some(ps.simplices.len());
    report.pareto_components = Some(ps.component_count());
    if let Some(out) = &a.out {
        let mut arrays = pareto_arrays(&ps, complex.len());
        arrays.extend(admissible_function_arrays("f", &f));
        write_grid(out, "Pareto set", &complex, &coords, &arrays)?;
    }
    emit(&report, a.report.as_deref())
}

fn run_components(a: ComponentsArgs) -> Result<()> {
    let (complex, coords) = load_mesh(&a.mesh)?;
    let f = load_function(&complex, &coords, &a.func, false)?;
    let index = build_index(&complex, &coords, a.index)?;
    let (g, field, _) = generate_mdm(&complex, &f, &index, a.eps)?;
    let relation = a.relation.into();
    let cc = critical_components(&complex, &g, &f, &field, relation);

    let mut report = AnalysisReport::new(&complex);
    report.eps = Some(a.eps);
    report.set_morse_counts(field.morse_counts(&complex));
    report.relation = Some(relation.to_string());
    report.classes = Some(cc.len());
    report.class_sizes = Some(cc.classes.iter().map(SimplexSet::len).collect());
    if let Some(out) = &a.out {
        let mut arrays = vec![
            criticality_array(&complex, &field),
            component_array(&cc, complex.len()),
        ];
        arrays.extend(admissible_function_arrays("f", &f));
        arrays.extend(mdm_function_arrays("g", &g));
        write_grid(out, "critical components", &complex, &coords, &arrays)?;
    }
    emit(&report, a.report.as_deref())
}

fn run_check(a: CheckArgs) -> Result<()> {
    let (complex, coords) = load_mesh(&a.mesh)?;
    let mut report = AnalysisReport::new(&complex);
    let f = match load_function(&complex, &coords, &a.func, true) {
        Ok(f) => f,
        Err(err) => {
            // An order violation is a verdict worth reporting before the
            // nonzero exit; other failures just propagate.
            if matches!(
                err.root_cause().downcast_ref::<FiltrationError>(),
                Some(FiltrationError::NotAdmissible { .. })
            ) {
                report.admissible = Some(false);
                emit(&report, a.report.as_deref())?;
            }
            return Err(err);
        }
    };
    report.admissible = Some(true);
    let levels = level_sets(&complex, &f);
    report.levels = Some(levels.len());
    report.lambda = Some(levels.max_level_size());

    let g = MdmFunction::from_admissible(&f);
    let verdict = verify_mdm(&complex, &g);
    report.already_morse = Some(verdict.is_mdm());
    if verdict.is_mdm() {
        let field = gradient_of(&complex, &g).expect("verified Morse function");
        field
            .validate(&complex)
            .map_err(|e| anyhow::anyhow!("extracted field fails validation: {e}"))?;
        if field.is_acyclic(&complex).is_err() {
            bail!("extracted gradient field contains a closed path");
        }
        report.set_morse_counts(field.morse_counts(&complex));
    } else {
        let first = &verdict.violations[0];
        eprintln!(
            "not a Morse function: {} condition violations, first at cell {} ({:?})",
            verdict.violations.len(),
            first.simplex,
            first.condition,
        );
    }
    emit(&report, a.report.as_deref())
}
