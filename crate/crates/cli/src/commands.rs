//! Subcommand drivers. Each returns its full text output and an exit code.

use std::fmt::Write;

use lkoszul::basis::{hilbert_from_basis, hilbert_from_linalg};
use lkoszul::field::{Field, Matrix, Subspace};
use lkoszul::graph::{
    chain, complete_layered, hypercube, non_uniform_witness, to_text, LayeredGraph, Uniformity,
};
use lkoszul::koszul::{
    euler_check, is_distributive, lattice_closure, lemma42_sides, lemma44_sides, quadratic_dual,
    relation_family, tor_table, Distributivity,
};
use lkoszul::relations::{
    full_relation_span, quadratic_generators_a, quadratic_generators_gr, quadratic_relations,
    Presentation,
};
use lkoszul::tensor::component_dim;
use lkoszul::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::input::{load_graph, load_graph_unvalidated};
use crate::{Command, Config, GraphKind, HilbertMode, KoszulMethod, LemmaArg, PresentationArg};

pub const PASS: u8 = 0;
pub const FAIL: u8 = 1;
pub const INPUT: u8 = 2;
pub const CAP: u8 = 3;

pub struct Report {
    pub text: String,
    pub code: u8,
    pub error: Option<String>,
}

impl Report {
    pub fn input_error(msg: String) -> Self {
        Report {
            text: String::new(),
            code: INPUT,
            error: Some(msg),
        }
    }

    fn with_error(text: String, e: Error) -> Self {
        let code = match e {
            Error::AmbientCap { .. } | Error::PathCap { .. } | Error::LatticeCap { .. } => CAP,
            _ => INPUT,
        };
        Report {
            text,
            code,
            error: Some(e.to_string()),
        }
    }
}

/// Output accumulated so far plus the verdict; errors keep the partial text.
struct Out {
    text: String,
    ok: bool,
}

impl Out {
    fn new() -> Self {
        Out {
            text: String::new(),
            ok: true,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn check(&mut self, ok: bool) -> &'static str {
        self.ok &= ok;
        if ok {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

pub fn run<F: Field>(field: &F, cmd: &Command, config: &Config) -> Report {
    let mut out = Out::new();
    let result = match cmd {
        Command::Generate { kind, n, sizes } => generate(&mut out, *kind, *n, sizes),
        Command::Validate { graph } => validate(&mut out, graph),
        Command::CheckUniform { graph } => check_uniform(&mut out, graph),
        Command::Relations {
            graph,
            presentation,
            max,
        } => relations(&mut out, field, graph, *presentation, *max, config),
        Command::Hilbert { graph, mode, max } => {
            hilbert(&mut out, field, graph, *mode, *max, config)
        }
        Command::Koszul {
            graph,
            method,
            max,
            presentation,
        } => koszul(&mut out, field, graph, *method, *max, *presentation, config),
        Command::LemmaCheck {
            graph,
            lemma,
            k,
            trials,
        } => match lemma {
            LemmaArg::ImageIntersection => {
                image_intersection(&mut out, field, *trials, config.seed)
            }
            _ => {
                load_graph(graph).and_then(|g| lemma_check(&mut out, field, &g, *lemma, *k, config))
            }
        },
    };
    match result {
        Ok(()) => Report {
            text: out.text,
            code: if out.ok { PASS } else { FAIL },
            error: None,
        },
        Err(e) => Report::with_error(out.text, e),
    }
}

fn generate(
    out: &mut Out,
    kind: GraphKind,
    n: Option<usize>,
    sizes: &[usize],
) -> lkoszul::Result<()> {
    let need_n = || n.ok_or_else(|| Error::OutOfRange("--n is required".into()));
    let g = match kind {
        GraphKind::Hypercube => hypercube(need_n()?)?,
        GraphKind::Chain => chain(need_n()?)?,
        GraphKind::Complete => complete_layered(sizes)?,
        GraphKind::Witness => non_uniform_witness(),
    };
    out.text.push_str(&to_text(&g));
    Ok(())
}

fn validate(out: &mut Out, arg: &str) -> lkoszul::Result<()> {
    let g = load_graph_unvalidated(arg)?;
    let violations = g.validate();
    if violations.is_empty() {
        out.line(format!(
            "VALID vertices {} edges {} height {}",
            g.num_vertices(),
            g.num_edges(),
            g.height()
        ));
    } else {
        out.ok = false;
        for v in violations {
            out.line(format!("INVALID {v}"));
        }
    }
    Ok(())
}

fn check_uniform(out: &mut Out, arg: &str) -> lkoszul::Result<()> {
    let g = load_graph(arg)?;
    match g.check_uniform() {
        Uniformity::Uniform => out.line("UNIFORM"),
        Uniformity::NonUniform { vertex, u, w } => {
            out.ok = false;
            out.line(format!(
                "NON-UNIFORM v={} u={} w={}",
                g.name(vertex),
                g.name(u),
                g.name(w)
            ));
        }
    }
    Ok(())
}

fn presentation(p: PresentationArg) -> Presentation {
    match p {
        PresentationArg::A => Presentation::A,
        PresentationArg::Gr => Presentation::Graded,
    }
}

/// Generators of the chosen presentation, then per degree the dimension of
/// the full relation ideal (path relations for `A`, the complement of the
/// basis count for `gr A`) against the ideal generated in degree 2.
fn relations<F: Field>(
    out: &mut Out,
    field: &F,
    arg: &str,
    which: PresentationArg,
    max: usize,
    config: &Config,
) -> lkoszul::Result<()> {
    let g = load_graph(arg)?;
    let gens = match which {
        PresentationArg::A => quadratic_generators_a(&g)?,
        PresentationArg::Gr => quadratic_generators_gr(&g)?,
    };
    for r in &gens {
        out.line(format!("relation\t{}", r.format(&g)));
    }
    let p = quadratic_relations(&g, field, presentation(which))?;
    let n = g.num_positive();
    let basis = hilbert_from_basis(&g, max);
    for k in 1..=max {
        let quadratic = p.ideal_component(k, config.caps.ambient)?.dim();
        let ideal = match which {
            PresentationArg::A => full_relation_span(&g, field, k, &config.caps)?.dim(),
            PresentationArg::Gr => component_dim(n, k, config.caps.ambient)? - basis[k],
        };
        out.ok &= ideal == quadratic;
        out.line(format!(
            "degree\t{k}\tdim_ideal\t{ideal}\tdim_quadratic\t{quadratic}"
        ));
    }
    Ok(())
}

fn hilbert<F: Field>(
    out: &mut Out,
    field: &F,
    arg: &str,
    mode: HilbertMode,
    max: usize,
    config: &Config,
) -> lkoszul::Result<()> {
    let g = load_graph(arg)?;
    let basis = (mode != HilbertMode::Linalg).then(|| hilbert_from_basis(&g, max));
    let linalg = match mode {
        HilbertMode::Basis => None,
        _ => {
            let p = quadratic_relations(&g, field, Presentation::Graded)?;
            Some(hilbert_from_linalg(&p, max, &config.caps)?)
        }
    };
    let cell =
        |v: &Option<Vec<usize>>, k: usize| v.as_ref().map_or("-".to_string(), |v| v[k].to_string());
    for k in 0..=max {
        let verdict = match (&basis, &linalg) {
            (Some(b), Some(l)) => {
                let m = b[k] == l[k];
                out.ok &= m;
                m.to_string()
            }
            _ => "-".to_string(),
        };
        out.line(format!(
            "degree\t{k}\tbasis\t{}\tlinalg\t{}\tmatch\t{verdict}",
            cell(&basis, k),
            cell(&linalg, k)
        ));
    }
    Ok(())
}

fn koszul<F: Field>(
    out: &mut Out,
    field: &F,
    arg: &str,
    method: KoszulMethod,
    max: usize,
    which: PresentationArg,
    config: &Config,
) -> lkoszul::Result<()> {
    let g = load_graph(arg)?;
    let p = quadratic_relations(&g, field, presentation(which))?;
    let cap = config.caps.ambient;
    match method {
        KoszulMethod::Tor => {
            let tor = tor_table(&p, max, cap)?;
            for ((i, j), d) in tor.entries() {
                let ok = i == j || d == 0;
                out.ok &= ok;
                out.line(format!(
                    "i\t{i}\tj\t{j}\ttor\t{d}\t{}",
                    if ok { "ok" } else { "off-diagonal" }
                ));
            }
        }
        KoszulMethod::Euler => {
            let a = p.hilbert(max, cap)?;
            let dual = quadratic_dual(&p).hilbert(max, cap)?;
            let residuals = euler_check(&p, max, cap)?;
            for n in 1..=max {
                let r = residuals[n - 1];
                out.ok &= r == 0;
                out.line(format!(
                    "n\t{n}\thilbert\t{}\tdual\t{}\tresidual\t{r}",
                    a[n], dual[n]
                ));
            }
        }
        KoszulMethod::Lattice => {
            for k in 3..=max.max(3) {
                let fam = relation_family(&g, &p, k, None, cap)?;
                let lat = lattice_closure(&fam, config.caps.lattice)?;
                let mut line = format!("k\t{k}\tgenerators\t{}\tsize\t{}", fam.len(), lat.len());
                let d = is_distributive(&lat);
                out.ok &= d == Distributivity::Distributive;
                write!(
                    line,
                    "\tdistributive\t{}",
                    d == Distributivity::Distributive
                )
                .expect("string write");
                out.line(line);
            }
        }
    }
    Ok(())
}

fn lemma_check<F: Field>(
    out: &mut Out,
    field: &F,
    g: &LayeredGraph,
    lemma: LemmaArg,
    k: usize,
    config: &Config,
) -> lkoszul::Result<()> {
    match lemma {
        LemmaArg::PathKernels => {
            let (lhs, rhs) = lemma42_sides(g, field, k, &config.caps)?;
            let verdict = out.check(lhs == rhs);
            out.line(format!(
                "lemma\t4.2\tk\t{k}\tlhs\t{}\trhs\t{}\t{verdict}",
                lhs.dim(),
                rhs.dim()
            ));
        }
        LemmaArg::ShiftedPaths => {
            if k < 3 {
                return Err(Error::OutOfRange(format!(
                    "lemma 4.4 needs --k >= 3, got {k}"
                )));
            }
            for v in g.positive_vertices().filter(|&v| g.level(v) >= 2) {
                for j in 1..=g.level(v) {
                    for l in 0..=k - 3 {
                        let (lhs, rhs) = lemma44_sides(g, field, v, j, l, &config.caps)?;
                        let verdict = out.check(lhs == rhs);
                        out.line(format!(
                            "lemma\t4.4\tv\t{}\tj\t{j}\tl\t{l}\tlhs\t{}\trhs\t{}\t{verdict}",
                            g.name(v),
                            lhs.dim(),
                            rhs.dim()
                        ));
                    }
                }
            }
        }
        LemmaArg::PathLattice => {
            let p = quadratic_relations(g, field, Presentation::Graded)?;
            for v in g.positive_vertices() {
                for l in 1..=g.level(v) {
                    let fam = relation_family(g, &p, k, Some((v, l)), config.caps.ambient)?;
                    let lat = lattice_closure(&fam, config.caps.lattice)?;
                    let verdict = out.check(is_distributive(&lat) == Distributivity::Distributive);
                    out.line(format!(
                        "lemma\t4.7\tv\t{}\tl\t{l}\tk\t{k}\tsize\t{}\t{verdict}",
                        g.name(v),
                        lat.len()
                    ));
                }
            }
        }
        LemmaArg::ImageIntersection => unreachable!("handled without a graph"),
    }
    Ok(())
}

fn random_subspace<F: Field>(rng: &mut ChaCha8Rng, field: &F, dim: usize) -> Subspace<F> {
    let count = rng.gen_range(0..=dim);
    let rows = (0..count)
        .map(|_| random_row(rng, field, dim))
        .collect::<Vec<_>>();
    Subspace::span(field, dim, rows)
}

fn random_row<F: Field>(rng: &mut ChaCha8Rng, field: &F, dim: usize) -> Vec<(usize, F::Elem)> {
    let mut row = Vec::new();
    for c in 0..dim {
        let x = field.from_i64(rng.gen_range(-2..=2));
        if !field.is_zero(&x) {
            row.push((c, x));
        }
    }
    row
}

/// `h(A) ∩ h(B) = h(A ∩ B)` for random `h`, `A`, and `B = h^(-1)(C)`.
fn image_intersection<F: Field>(
    out: &mut Out,
    field: &F,
    trials: usize,
    seed: u64,
) -> lkoszul::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let (rows, cols) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let h = Matrix::from_rows(
            field,
            cols,
            (0..rows)
                .map(|_| random_row(&mut rng, field, cols))
                .collect(),
        );
        let a = random_subspace(&mut rng, field, cols);
        let c = random_subspace(&mut rng, field, rows);
        let b = h.preimage(&c)?;
        let lhs = h.image(&a)?.intersect(&h.image(&b)?)?;
        let rhs = h.image(&a.intersect(&b)?)?;
        if lhs != rhs {
            failures += 1;
        }
    }
    let verdict = out.check(failures == 0);
    out.line(format!(
        "lemma\t4.3\tseed\t{seed}\ttrials\t{trials}\tfailures\t{failures}\t{verdict}"
    ));
    Ok(())
}
