//! Subcommands, registered by name and dispatched at runtime.

use std::fmt::Write as _;
use std::path::PathBuf;

use brandt_nsr::brandt::Brandt;
use brandt_nsr::cache::load_or_build;
use brandt_nsr::congruence::{congruence_lattice, CompatibilityMode};
use brandt_nsr::generation::generate;
use brandt_nsr::report::{
    AnnihilatorsReport, CongruenceReport, EndosReport, FormulaReport, GenReport, RightIdealsReport,
};
use brandt_nsr::structure::radical_report;
use brandt_nsr::table::NearSemiringTable;
use brandt_nsr::verify::verify;
use brandt_nsr::{NsrError, Result};
use serde::Serialize;

/// Largest `n` any command builds an algebra for.
pub const MAX_BUILD_N: usize = 4;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub mode: CompatibilityMode,
    pub json: bool,
    pub cache: Option<PathBuf>,
}

pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    /// `false` only when a verification check failed.
    pub success: bool,
}

impl Outcome {
    fn new(report: &impl Serialize, text: String) -> Result<Self> {
        Ok(Outcome {
            text,
            json: serde_json::to_value(report)?,
            success: true,
        })
    }
}

pub trait Command: Sync {
    fn name(&self) -> &'static str;

    fn about(&self) -> &'static str;

    /// Heavy commands need `--allow-heavy` at `n = 4`.
    fn heavy(&self) -> bool {
        false
    }

    /// Largest accepted `n`.
    fn max_n(&self) -> usize {
        MAX_BUILD_N
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome>;
}

static REGISTRY: [&dyn Command; 7] = [
    &Gen,
    &Endos,
    &Congruences,
    &RightIdeals,
    &Annihilators,
    &Radicals,
    &Verify,
];

pub fn registry() -> &'static [&'static dyn Command] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Option<&'static dyn Command> {
    registry().iter().copied().find(|c| c.name() == name)
}

/// The algebra for `cfg.n`, through the cache when one is configured.
fn algebra(cfg: &RunConfig) -> Result<NearSemiringTable> {
    match &cfg.cache {
        Some(path) => load_or_build(cfg.n, path),
        None => generate(cfg.n).map(|g| g.algebra),
    }
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

struct Gen;

impl Command for Gen {
    fn name(&self) -> &'static str {
        "gen"
    }

    fn about(&self) -> &'static str {
        "build N and report its size and elements"
    }

    fn max_n(&self) -> usize {
        usize::MAX
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome> {
        if cfg.n > MAX_BUILD_N {
            let report = FormulaReport::new(cfg.n);
            let text = match report.formula {
                Some(f) => format!("n = {}\n|A⁺(B_{})| = {f} by formula (not built)\n", cfg.n, cfg.n),
                None => format!("n = {}\nformula overflows\n", cfg.n),
            };
            return Outcome::new(&report, text);
        }
        let report = match &cfg.cache {
            Some(path) => GenReport::from_algebra(&load_or_build(cfg.n, path)?),
            None => GenReport::from_generation(&generate(cfg.n)?),
        };
        let mut text = String::new();
        let _ = writeln!(text, "n = {}", report.n);
        let _ = write!(text, "|A⁺(B_{})| = {}", report.n, report.nonzero);
        match report.formula {
            Some(f) => {
                let _ = writeln!(text, " (formula {f})");
            }
            None => text.push('\n'),
        }
        let _ = writeln!(text, "|N| = {}", report.total);
        let b = report.breakdown;
        let _ = writeln!(
            text,
            "constants {}, singletons {}, n-support {}",
            b.constants, b.singletons, b.n_support
        );
        if let (Some(e), Some(a)) = (report.endomorphisms, report.affine) {
            let _ = writeln!(text, "|End(B_{})| = {e}, affine maps {a}", report.n);
        }
        let _ = writeln!(text, "elements: {}", report.elements.join(" "));
        Outcome::new(&report, text)
    }
}

struct Endos;

impl Command for Endos {
    fn name(&self) -> &'static str {
        "endos"
    }

    fn about(&self) -> &'static str {
        "list End(B_n)"
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome> {
        let report = EndosReport::new(&Brandt::new(cfg.n)?);
        let mut text = format!("|End(B_{})| = {}\n", report.n, report.count);
        for e in &report.endomorphisms {
            let _ = writeln!(text, "{}  {}", e.images, e.form.as_deref().unwrap_or("-"));
        }
        Outcome::new(&report, text)
    }
}

struct Congruences;

impl Command for Congruences {
    fn name(&self) -> &'static str {
        "congruences"
    }

    fn about(&self) -> &'static str {
        "enumerate the congruences of the chosen mode"
    }

    fn heavy(&self) -> bool {
        true
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome> {
        let nsr = algebra(cfg)?;
        let lattice = congruence_lattice(&nsr, cfg.mode);
        let report = CongruenceReport::new(&nsr, cfg.mode, &lattice);
        let mut text = format!(
            "mode {}: {}\ncount {}\n",
            cfg.mode,
            cfg.mode.strategy().description(),
            report.count
        );
        for (i, c) in report.congruences.iter().enumerate() {
            let tag = match (c.is_universal, c.is_equality) {
                (true, _) => " universal",
                (_, true) => " equality",
                _ => "",
            };
            let kernel = if c.kernel.len() == nsr.size() {
                "N".to_string()
            } else {
                braces(&c.kernel)
            };
            let _ = writeln!(text, "#{i} classes {} kernel {kernel}{tag}", c.classes);
        }
        Outcome::new(&report, text)
    }
}

struct RightIdeals;

impl Command for RightIdeals {
    fn name(&self) -> &'static str {
        "rightideals"
    }

    fn about(&self) -> &'static str {
        "list the right ideals (kernels of congruences of N⁺)"
    }

    fn heavy(&self) -> bool {
        true
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome> {
        let nsr = algebra(cfg)?;
        let report = RightIdealsReport::new(&nsr);
        let mut text = format!("{} right ideals\n", report.count);
        for k in &report.right_ideals {
            if k.len() == nsr.size() {
                let _ = writeln!(text, "N ({} elements)", k.len());
            } else {
                let _ = writeln!(text, "{}", braces(k));
            }
        }
        Outcome::new(&report, text)
    }
}

struct Annihilators;

impl Command for Annihilators {
    fn name(&self) -> &'static str {
        "annihilators"
    }

    fn about(&self) -> &'static str {
        "annihilators and N-subsemigroups of C"
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome> {
        let nsr = algebra(cfg)?;
        let report = AnnihilatorsReport::new(&nsr)?;
        let mut text = format!("C = {}\n", braces(&report.carrier));
        for e in &report.annihilators {
            let shown = if e.annihilator.len() == nsr.size() {
                "N".to_string()
            } else {
                braces(&e.annihilator)
            };
            let _ = writeln!(text, "A({}) = {shown}", e.subject);
        }
        let _ = writeln!(text, "A(C) = {}", braces(&report.annihilator_of_c));
        let _ = writeln!(
            text,
            "strongly monogenic: {} (witness {})",
            report.strongly_monogenic,
            report.witness.as_deref().unwrap_or("none")
        );
        let _ = writeln!(text, "N-subsemigroups: {}", report.n_subsemigroups.len());
        Outcome::new(&report, text)
    }
}

struct Radicals;

impl Command for Radicals {
    fn name(&self) -> &'static str {
        "radicals"
    }

    fn about(&self) -> &'static str {
        "radical values with their checked premises"
    }

    fn heavy(&self) -> bool {
        true
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome> {
        let nsr = algebra(cfg)?;
        let report = radical_report(&nsr)?;
        let mut text = String::new();
        for e in &report.entries {
            let refs: Vec<String> = e.premises.iter().map(|p| format!("P{p}")).collect();
            let _ = writeln!(text, "{} = {}  [{}]", e.name, e.value, refs.join(" "));
        }
        for (i, p) in report.premises.iter().enumerate() {
            let _ = write!(text, "P{i} {} {}", if p.holds { "ok" } else { "FAILED" }, p.claim);
            match &p.witness {
                Some(w) => {
                    let _ = writeln!(text, " ({w})");
                }
                None => text.push('\n'),
            }
        }
        for note in &report.notes {
            let _ = writeln!(text, "note: {note}");
        }
        Outcome::new(&report.json(), text)
    }
}

struct Verify;

impl Command for Verify {
    fn name(&self) -> &'static str {
        "verify"
    }

    fn about(&self) -> &'static str {
        "run every theorem check; exit 1 if any fails"
    }

    fn heavy(&self) -> bool {
        true
    }

    fn run(&self, cfg: &RunConfig) -> Result<Outcome> {
        let nsr = algebra(cfg)?;
        let report = verify(&nsr)?;
        let mut text = String::new();
        for c in &report.checks {
            let _ = writeln!(
                text,
                "{} {} (n = {}): {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.n,
                c.detail
            );
        }
        let mut out = Outcome::new(&report, text)?;
        out.success = report.passed();
        Ok(out)
    }
}

/// Exit status for a library error: refused premises count as failed
/// checks, everything else is internal.
pub fn exit_code(err: &NsrError) -> u8 {
    match err {
        NsrError::InvalidN { .. } | NsrError::UnknownMode(_) => 2,
        NsrError::PremiseFailed { .. } => 1,
        _ => 3,
    }
}
