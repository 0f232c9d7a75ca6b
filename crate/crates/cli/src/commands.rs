use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, TAU};
use std::fs;
use std::path::Path;

use serde::Serialize;
use ybgate_core::eightvertex::{
    build_b, build_b_phi, build_r_theta, build_r_x, build_r_x_normalized, theta_from_x,
    x_from_theta,
};
use ybgate_core::entangle::{is_entangling_seeded, RandomStates, DEFAULT_THRESHOLD};
use ybgate_core::gates::{
    cnot, cnot_via_local_gates, compare_gates, evolution_chain, Equality, RESOLVED_PHASE_GATE,
};
use ybgate_core::hamiltonian::{
    evolution_u, hamiltonian_const, hamiltonian_x, r_from_h, schrodinger_residual, DEFAULT_STEP,
};
use ybgate_core::linalg::{residual, unitarity_residual};
use ybgate_core::yangbaxter::{braid_residual, qybe_residual};
use ybgate_core::{Complex64, Matrix, Sign};

use crate::args::{
    Cli, Command, Family, Format, MatrixArgs, Param, Quantity, Relation, Route, SweepArgs,
    SynthesizeArgs, VerifyArgs,
};
use crate::document::MatrixDocument;
use crate::error::CliError;
use crate::report::{fmt_f64, SweepReport};

/// Text for stdout plus the verification verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub pass: bool,
}

pub fn run(cli: &Cli, seed: u64) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Verify(a) => verify(a, seed),
        Command::Matrix(a) => matrix(a),
        Command::Synthesize(a) => synthesize(a),
        Command::Sweep(a) => sweep(a, seed),
    }
}

/// Reads a seed override such as `42` or `0x5EED`.
pub fn parse_seed(s: &str) -> Result<u64, CliError> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|_| CliError::Usage(format!("YBG_SEED: cannot parse '{s}' as an integer")))
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn emit(text: String, out: Option<&Path>) -> Result<String, CliError> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn render(report: &SweepReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    }
}

fn tolerance(tol: Option<f64>, default: f64) -> Result<f64, CliError> {
    let tol = tol.unwrap_or(default);
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(usage("--tol must be a positive finite number"))
    }
}

fn signs(sign: Option<Sign>) -> Vec<Sign> {
    sign.map_or_else(|| Sign::ALL.to_vec(), |s| vec![s])
}

fn q_of(phi: f64) -> Complex64 {
    Complex64::from_polar(1.0, -phi)
}

/// `n` points from `a` to `b` inclusive.
fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| {
            if k + 1 == n {
                b
            } else {
                a + (b - a) * k as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn max_over<I, F>(items: I, mut f: F) -> Result<f64, CliError>
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Result<f64, CliError>,
{
    let mut m = 0.0_f64;
    for item in items {
        let v = f(item)?;
        if v.is_nan() {
            return Ok(f64::NAN);
        }
        m = m.max(v);
    }
    Ok(m)
}

fn verify(a: &VerifyArgs, seed: u64) -> Result<Outcome, CliError> {
    let default_tol = match a.relation {
        Relation::Qybe => 1e-10,
        Relation::Schrodinger => 1e-6,
        _ => 1e-12,
    };
    let tol = tolerance(a.tol, default_tol)?;
    if a.phi_grid == 0 {
        return Err(usage("--phi-grid must be at least 1"));
    }
    let phis: Vec<f64> = (0..a.phi_grid)
        .map(|k| TAU * k as f64 / a.phi_grid as f64)
        .collect();
    let signs = signs(a.sign);
    let name = format!("{:?}", a.relation).to_lowercase();

    let report = if let Some(path) = &a.matrix_file {
        let m = MatrixDocument::read(path)?.to_matrix()?;
        let r = match a.relation {
            Relation::Braid => braid_residual(&m)?,
            Relation::Unitarity => unitarity_residual(&m),
            _ => return Err(usage("--matrix-file applies to braid and unitarity only")),
        };
        SweepReport::residuals("matrix", &name, vec![0.0], vec![r], tol)
    } else {
        let grid = |default: usize| -> Result<usize, CliError> {
            match a.grid.unwrap_or(default) {
                0 => Err(usage("--grid must be at least 1")),
                n => Ok(n),
            }
        };
        match a.relation {
            Relation::Braid => {
                let values = phis
                    .iter()
                    .map(|&phi| max_over(&signs, |&s| Ok(braid_residual(&build_b_phi(s, phi))?)))
                    .collect::<Result<_, _>>()?;
                SweepReport::residuals("phi", &name, phis, values, tol)
            }
            Relation::Qybe => {
                let n = grid(16)?;
                let xs: Vec<f64> = (1..=n).map(|k| 2.0 * k as f64 / n as f64).collect();
                let values = phis
                    .iter()
                    .map(|&phi| {
                        max_over(&signs, |&s| {
                            let family = |t: f64| build_r_x(s, q_of(phi), t).expect("unit q");
                            max_over(&xs, |&x| {
                                max_over(&xs, |&y| Ok(qybe_residual(family, x, y)?))
                            })
                        })
                    })
                    .collect::<Result<_, _>>()?;
                SweepReport::residuals("phi", &name, phis, values, tol)
            }
            Relation::Unitarity => {
                let xs = linspace(-3.0, 3.0, grid(61)?);
                let values = xs
                    .iter()
                    .map(|&x| {
                        max_over(&signs, |&s| {
                            max_over(&phis, |&phi| {
                                Ok(unitarity_residual(&build_r_x_normalized(s, phi, x)))
                            })
                        })
                    })
                    .collect::<Result<_, _>>()?;
                SweepReport::residuals("x", &name, xs, values, tol)
            }
            Relation::Schrodinger => {
                let xs = linspace(0.25, 2.0, grid(8)?);
                let states: Vec<_> = RandomStates::new(seed).take(8).collect();
                let values = xs
                    .iter()
                    .map(|&x| {
                        max_over(&signs, |&s| {
                            max_over(&phis, |&phi| {
                                max_over(&states, |psi| {
                                    Ok(schrodinger_residual(s, phi, psi, x, DEFAULT_STEP))
                                })
                            })
                        })
                    })
                    .collect::<Result<_, _>>()?;
                SweepReport::residuals("x", &name, xs, values, tol)
            }
            Relation::Exponential => {
                let thetas = linspace(0.0, FRAC_PI_2, grid(17)?);
                let values = thetas
                    .iter()
                    .map(|&theta| {
                        max_over(&signs, |&s| {
                            max_over(&phis, |&phi| {
                                Ok(residual(
                                    &r_from_h(s, phi, theta),
                                    &build_r_theta(s, phi, theta),
                                )?)
                            })
                        })
                    })
                    .collect::<Result<_, _>>()?;
                SweepReport::residuals("theta", &name, thetas, values, tol)
            }
        }
    };
    Ok(Outcome {
        stdout: emit(render(&report, a.format), a.out.as_deref())?,
        pass: report.pass,
    })
}

fn fmt_complex(z: Complex64) -> String {
    format!("{},{}", fmt_f64(z.re), fmt_f64(z.im))
}

fn matrix(a: &MatrixArgs) -> Result<Outcome, CliError> {
    if a.theta.is_some() && a.x.is_some() {
        return Err(usage("give at most one of --theta and --x"));
    }
    if a.q.is_some() && a.phi.is_some() {
        return Err(usage("give at most one of --q and --phi"));
    }
    for v in [a.phi, a.theta, a.x].into_iter().flatten() {
        if !v.is_finite() {
            return Err(usage("parameters must be finite"));
        }
    }
    let mut meta = BTreeMap::new();
    let family = match a.family {
        Family::B => "b",
        Family::BPhi => "bphi",
        Family::Rx => "Rx",
        Family::RTheta => "Rtheta",
        Family::H => "H",
        Family::Hx => "Hx",
        Family::U => "U",
        Family::Cnot => "cnot",
    };
    meta.insert("family".to_owned(), family.to_owned());

    // families built from q accept any non-zero q, the rest need φ
    let q = || a.q.unwrap_or_else(|| q_of(a.phi.unwrap_or(0.0)));
    let phi = || -> Result<f64, CliError> {
        match a.q {
            Some(q) if (q.norm() - 1.0).abs() > 1e-12 => Err(usage("this family needs |q| = 1")),
            Some(q) => Ok(-q.arg()),
            None => Ok(a.phi.unwrap_or(0.0)),
        }
    };
    let x = || a.x.unwrap_or_else(|| a.theta.map_or(0.0, x_from_theta));
    let theta = || a.theta.unwrap_or_else(|| a.x.map_or(0.0, theta_from_x));

    let mut note = |key: &str, value: String| {
        meta.insert(key.to_owned(), value);
    };
    let m: Matrix = match a.family {
        Family::Cnot => cnot(),
        Family::B | Family::Rx => {
            note("sign", a.sign.to_string());
            note("q", fmt_complex(q()));
            if a.family == Family::B {
                build_b(a.sign, q())?
            } else {
                note("x", fmt_f64(x()));
                build_r_x(a.sign, q(), x())?
            }
        }
        _ => {
            let phi = phi()?;
            note("sign", a.sign.to_string());
            note("phi", fmt_f64(phi));
            match a.family {
                Family::BPhi => build_b_phi(a.sign, phi),
                Family::H => hamiltonian_const(a.sign, phi),
                Family::Hx => {
                    note("x", fmt_f64(x()));
                    hamiltonian_x(a.sign, phi, x())
                }
                Family::RTheta => {
                    note("theta", fmt_f64(theta()));
                    build_r_theta(a.sign, phi, theta())
                }
                Family::U => {
                    note("theta", fmt_f64(theta()));
                    evolution_u(a.sign, phi, theta())
                }
                Family::B | Family::Rx | Family::Cnot => unreachable!(),
            }
        }
    };
    if !m.is_finite() {
        return Err(usage("matrix has non-finite entries at these parameters"));
    }
    let doc = MatrixDocument::from_matrix(&m, meta);
    Ok(Outcome {
        stdout: emit(doc.to_json(), a.out.as_deref())?,
        pass: true,
    })
}

#[derive(Serialize)]
struct SynthesisReport {
    route: &'static str,
    matrix: MatrixDocument,
    residual: f64,
    phase: f64,
    phase_residual: f64,
    verdict: &'static str,
    tolerance: f64,
    pass: bool,
}

fn synthesize(a: &SynthesizeArgs) -> Result<Outcome, CliError> {
    let tol = tolerance(Some(a.tol), 1e-12)?;
    let (route, m, mut meta) = match a.route {
        Route::Theorem1 => {
            if a.theta.is_some() {
                return Err(usage("--theta applies to the evolution route only"));
            }
            ("theorem1", cnot_via_local_gates(), BTreeMap::new())
        }
        Route::Evolution => {
            let theta = a.theta.unwrap_or(FRAC_PI_2);
            let meta = BTreeMap::from([
                ("phi".to_owned(), fmt_f64(a.phi)),
                ("theta".to_owned(), fmt_f64(theta)),
            ]);
            (
                "evolution",
                evolution_chain(a.phi, theta, RESOLVED_PHASE_GATE),
                meta,
            )
        }
    };
    meta.insert("route".to_owned(), route.to_owned());
    let cmp = compare_gates(&m, &cnot(), tol)?;
    let verdict = match cmp.verdict {
        Equality::Exact => "exact",
        Equality::GlobalPhase { .. } => "global-phase",
        Equality::Different => "different",
    };
    let report = SynthesisReport {
        route,
        matrix: MatrixDocument::from_matrix(&m, meta),
        residual: cmp.residual,
        phase: cmp.phase,
        phase_residual: cmp.phase_residual,
        verdict,
        tolerance: tol,
        pass: cmp.residual < tol,
    };
    let mut stdout = serde_json::to_string_pretty(&report).expect("report serializes");
    stdout.push('\n');
    Ok(Outcome {
        stdout,
        pass: report.pass,
    })
}

/// Gate coordinates at one sweep point.
#[derive(Debug, Clone, Copy)]
struct Point {
    phi: f64,
    theta: f64,
    x: f64,
}

fn sweep(a: &SweepArgs, seed: u64) -> Result<Outcome, CliError> {
    if a.steps < 2 {
        return Err(usage("--steps must be at least 2"));
    }
    if !(a.from.is_finite() && a.to.is_finite()) {
        return Err(usage("--from and --to must be finite"));
    }
    if a.theta.is_some() && a.x.is_some() {
        return Err(usage("give at most one of --theta and --x"));
    }
    let fixed_spectral = a.theta.is_some() || a.x.is_some();
    match a.param {
        Param::Theta | Param::X if fixed_spectral => {
            return Err(usage("--theta/--x conflict with the swept parameter"));
        }
        Param::Phi if a.phi.is_some() => {
            return Err(usage("--phi conflicts with the swept parameter"))
        }
        _ => {}
    }
    if a.quantity == Quantity::Braid && a.param != Param::Phi {
        return Err(usage("the braid sweep runs over --param phi"));
    }

    let grid = linspace(a.from, a.to, a.steps);
    let point = |v: f64| match a.param {
        Param::Theta => Point {
            phi: a.phi.unwrap_or(0.0),
            theta: v,
            x: x_from_theta(v),
        },
        Param::X => Point {
            phi: a.phi.unwrap_or(0.0),
            theta: theta_from_x(v),
            x: v,
        },
        Param::Phi => {
            let (theta, x) = match (a.theta, a.x) {
                (_, Some(x)) => (theta_from_x(x), x),
                (t, None) => (t.unwrap_or(0.0), x_from_theta(t.unwrap_or(0.0))),
            };
            Point { phi: v, theta, x }
        }
    };
    let param = format!("{:?}", a.param).to_lowercase();
    let quantity = format!("{:?}", a.quantity).to_lowercase();
    let signs = signs(a.sign);
    let points: Vec<Point> = grid.iter().map(|&v| point(v)).collect();
    let per_point =
        |f: &dyn Fn(Sign, Point) -> Result<f64, CliError>| -> Result<Vec<f64>, CliError> {
            points
                .iter()
                .map(|&p| max_over(&signs, |&s| f(s, p)))
                .collect()
        };

    let report = match a.quantity {
        Quantity::Concurrence => {
            let values = per_point(&|s, p| {
                let g = build_r_theta(s, p.phi, p.theta);
                Ok(is_entangling_seeded(&g, DEFAULT_THRESHOLD, seed)?.concurrence_max)
            })?;
            let expected = points.iter().map(|p| (2.0 * p.theta).cos().abs()).collect();
            SweepReport::against(
                &param,
                &quantity,
                grid,
                values,
                expected,
                tolerance(a.tol, 1e-12)?,
            )
        }
        Quantity::Unitarity => {
            let values =
                per_point(&|s, p| Ok(unitarity_residual(&build_r_x_normalized(s, p.phi, p.x))))?;
            SweepReport::residuals(&param, &quantity, grid, values, tolerance(a.tol, 1e-12)?)
        }
        Quantity::Braid => {
            let values = per_point(&|s, p| Ok(braid_residual(&build_b_phi(s, p.phi))?))?;
            SweepReport::residuals(&param, &quantity, grid, values, tolerance(a.tol, 1e-12)?)
        }
        Quantity::Qybe => {
            let y = a.y;
            let values = per_point(&|s, p| {
                Ok(qybe_residual(
                    |t| build_r_x(s, q_of(p.phi), t).expect("unit q"),
                    p.x,
                    y,
                )?)
            })?;
            SweepReport::residuals(&param, &quantity, grid, values, tolerance(a.tol, 1e-10)?)
        }
    };
    Ok(Outcome {
        stdout: emit(render(&report, a.format), a.out.as_deref())?,
        pass: report.pass,
    })
}
