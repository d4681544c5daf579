use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cli_render::{
    load_config, render_fan_svg, report_to_text, report_to_value, run_classify, sweep_slice,
    to_json_string, write_csv, CliError, RenderModel,
};

#[derive(Parser)]
#[command(name = "flute", version, about = "Invariants and pictures of flute and end surfaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the surface described by a configuration file.
    Classify {
        /// Path to a JSON run configuration.
        #[arg(long)]
        config: PathBuf,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Sweep an (a, b) parameter rectangle and write the comparison as CSV.
    Slice {
        #[arg(long)]
        a0: f64,
        #[arg(long)]
        a1: f64,
        #[arg(long)]
        b0: f64,
        #[arg(long)]
        b1: f64,
        /// Grid spacing along both axes.
        #[arg(long)]
        step: f64,
        /// Cuffs per grid point for the numeric series verdict.
        #[arg(long, default_value_t = 100_000)]
        n_terms: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Render the geodesic fan and escaping path as SVG.
    Fan {
        /// Path to a JSON run configuration.
        #[arg(long)]
        config: PathBuf,
        /// Override path.terms from the config.
        #[arg(long)]
        terms: Option<usize>,
        /// Override render.model from the config (disk or halfplane).
        #[arg(long)]
        model: Option<String>,
        /// Output SVG path.
        #[arg(long)]
        svg: PathBuf,
        /// Exit with status 3 when the render carries warnings.
        #[arg(long)]
        strict: bool,
    },
    /// Run built-in consistency checks against closed forms.
    Selftest,
}

fn read_config(path: &PathBuf) -> Result<cli_render::RunConfig, CliError> {
    let text = fs::read_to_string(path)?;
    load_config(&text)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.cmd {
        Command::Classify { config, json } => {
            let cfg = read_config(&config)?;
            let report = run_classify(&cfg)?;
            if json {
                print!("{}", to_json_string(&report_to_value(&report)));
            } else {
                print!("{}", report_to_text(&report));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Slice { a0, a1, b0, b1, step, n_terms, out } => {
            let rows = sweep_slice(a0, a1, b0, b1, step, n_terms)?;
            fs::write(&out, write_csv(&rows))?;
            let disagreements = rows.iter().filter(|r| !r.agree).count();
            println!("wrote {} rows to {} ({} disagreements)", rows.len(), out.display(), disagreements);
            Ok(ExitCode::SUCCESS)
        }
        Command::Fan { config, terms, model, svg, strict } => {
            let mut cfg = read_config(&config)?;
            if let Some(t) = terms {
                cfg.path.terms = t;
            }
            if let Some(m) = &model {
                cfg.render.model = RenderModel::parse(m)?;
            }
            let render = render_fan_svg(&cfg)?;
            fs::write(&svg, &render.svg)?;
            for w in &render.warnings {
                eprintln!("warning: {w}");
            }
            println!("wrote {}", svg.display());
            if strict && !render.warnings.is_empty() {
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest => {
            let failures = selftest::run_all();
            if failures == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("{failures} selftest check(s) failed");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

mod selftest {
    use classifier::{classify_slice, series_verdict, series_verdict_log, SeriesStatus};
    use fenchel_nielsen::{eta_pentagon, sigma_sequence, slice_lengths, SliceParams};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use shear_fan::{horocyclic_lengths, measure_path, realize_fan, ShearSequence};

    fn check(name: &str, result: Result<(), String>) -> bool {
        match result {
            Ok(()) => {
                println!("ok - {name}");
                true
            }
            Err(detail) => {
                println!("FAIL - {name}: {detail}");
                false
            }
        }
    }

    /// Measured path lengths against the closed-form alternating sums on
    /// random shear sequences.
    fn measured_paths_match_closed_form() -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for case in 0..40 {
            let n = rng.gen_range(3..=30usize);
            let s1 = rng.gen_range(-1.5..1.5);
            let shears: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let sh = ShearSequence::new(s1, shears).map_err(|e| e.to_string())?;
            let fan = realize_fan(&sh, n + 1).map_err(|e| e.to_string())?;
            let measured = measure_path(&fan, s1).map_err(|e| e.to_string())?;
            let formula = horocyclic_lengths(&sh, n).map_err(|e| e.to_string())?;
            for (j, (a, b)) in measured.log_lengths.iter().zip(&formula.log_lengths).enumerate() {
                let rel = (a - b).abs() / b.abs().max(1.0);
                if rel > 1e-9 {
                    return Err(format!("case {case} arc {j}: {a} vs {b} (rel {rel:.2e})"));
                }
            }
        }
        Ok(())
    }

    /// The orthogeodesic length between consecutive cuffs sits inside its
    /// exponential bracket for nondecreasing lengths above 4.
    fn pentagon_eta_bracket() -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for case in 0..60 {
            let l1 = rng.gen_range(4.0..24.0);
            let l2 = l1 + rng.gen_range(0.0..6.0);
            let eta = eta_pentagon(l1, l2).map_err(|e| e.to_string())?;
            let lower = (-0.5 * l2).exp();
            let upper = 8.0 * (-0.5 * l1).exp();
            if !(eta > lower && eta < upper) {
                return Err(format!(
                    "case {case}: eta({l1}, {l2}) = {eta} outside ({lower}, {upper})"
                ));
            }
        }
        Ok(())
    }

    /// The series engine recognizes the classical boundary cases.
    fn series_sanity() -> Result<(), String> {
        let harmonic: Vec<f64> = (1..=100_000).map(|n| 1.0 / n as f64).collect();
        let v = series_verdict(&harmonic, 0.1).map_err(|e| e.to_string())?;
        if v.status != SeriesStatus::Divergent {
            return Err(format!("harmonic series read as {}", v.status));
        }
        let tail: Vec<f64> = (1..=100_000).map(|n| (n as f64).powf(-1.5)).collect();
        let v = series_verdict(&tail, 0.1).map_err(|e| e.to_string())?;
        if v.status != SeriesStatus::Convergent {
            return Err(format!("exponent 1.5 series read as {}", v.status));
        }
        Ok(())
    }

    /// Numeric series verdicts agree with the closed-form slice boundary at
    /// sample points on both sides.
    fn slice_verdicts() -> Result<(), String> {
        for (a, b, expect_parabolic) in
            [(4.0, 1.0, true), (1.0, 1.0, true), (3.0, 3.0, false), (0.5, 6.2, true)]
        {
            let closed = classify_slice(a, b).map_err(|e| e.to_string())?;
            let got = closed.parabolic_verdict.to_string();
            let want = if expect_parabolic { "PARABOLIC" } else { "NOT_PARABOLIC" };
            if got != want {
                return Err(format!("closed form at ({a}, {b}): {got}, expected {want}"));
            }
            let lengths = slice_lengths(&SliceParams { a, b, count: 20_000 });
            let logs: Vec<f64> = sigma_sequence(&lengths).iter().map(|s| -0.5 * s).collect();
            let v = series_verdict_log(&logs, 0.1).map_err(|e| e.to_string())?;
            let numeric_ok = match v.status {
                SeriesStatus::Divergent => expect_parabolic,
                SeriesStatus::Convergent => !expect_parabolic,
                SeriesStatus::Indeterminate => (a.min(b) - 2.0).abs() < 0.5,
            };
            if !numeric_ok {
                return Err(format!("numeric verdict at ({a}, {b}): {}", v.status));
            }
        }
        Ok(())
    }

    /// Runs every check, printing one line per check; returns the number of
    /// failures.
    pub fn run_all() -> usize {
        let checks: [(&str, fn() -> Result<(), String>); 4] = [
            ("measured paths match closed form", measured_paths_match_closed_form),
            ("pentagon eta bracket", pentagon_eta_bracket),
            ("series engine sanity", series_sanity),
            ("slice verdicts against closed form", slice_verdicts),
        ];
        checks.iter().filter(|(name, f)| !check(name, f())).count()
    }
}
