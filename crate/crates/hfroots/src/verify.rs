//! Runs the lattice oracles against the formula results.

use hfroots_core::plumbing::{
    krsq_formula, laufer_tau, lens_d_invariants, lens_d_recursive, reduce_tau, sublevel_root,
    SublevelBox, SurgeryLattice,
};
use hfroots_core::root::{isomorphic, root_from_tau};
use hfroots_core::{Error, GradedRoot, SpincResult, SurgerySpec};

use crate::report::{
    CheckStatus, ClassVerification, LensClass, LensReport, OracleCheck, VerificationReport,
};

/// Largest graph handed to the sublevel oracle.
pub const SUBLEVEL_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Oracle {
    None,
    Laufer,
    Sublevel,
    Both,
}

impl Oracle {
    pub fn name(self) -> &'static str {
        match self {
            Oracle::None => "none",
            Oracle::Laufer => "laufer",
            Oracle::Sublevel => "sublevel",
            Oracle::Both => "both",
        }
    }

    fn laufer(self) -> bool {
        matches!(self, Oracle::Laufer | Oracle::Both)
    }

    fn sublevel(self) -> bool {
        matches!(self, Oracle::Sublevel | Oracle::Both)
    }
}

fn check(status: CheckStatus, detail: impl Into<String>) -> OracleCheck {
    OracleCheck {
        status,
        detail: detail.into(),
        tau: None,
    }
}

pub fn verify_surgery(
    spec: &SurgerySpec,
    results: &[SpincResult],
    oracle: Oracle,
    max_steps: u64,
) -> Result<VerificationReport, Error> {
    let lattice = SurgeryLattice::new(spec)?;
    let mf = spec.knot().mf();
    let mut classes = Vec::with_capacity(results.len());
    for r in results {
        let class = lattice.spinc_class(r.a)?;
        let lattice_shift = lattice.shift(&class);
        let formula_shift = krsq_formula(spec, r.a)?;
        let shift_agrees = lattice_shift == formula_shift && formula_shift == r.r_a;
        log::debug!(
            "a = {}: lattice shift {lattice_shift}, formula {formula_shift}",
            r.a
        );

        let mut oracle_root: Option<GradedRoot> = None;
        let laufer = oracle.laufer().then(|| {
            let steps = ((r.t_a + 1) * mf) as u64;
            if steps > max_steps {
                return Ok(check(
                    CheckStatus::Skipped,
                    format!("walk of {steps} steps exceeds the limit of {max_steps}"),
                ));
            }
            let seq = match laufer_tau(lattice.graph(), &class, steps as usize) {
                Ok(seq) => seq,
                Err(Error::StepBound(n)) => {
                    return Ok(check(
                        CheckStatus::Skipped,
                        format!("relaxation exceeded {n} additions"),
                    ))
                }
                Err(e) => return Err(e),
            };
            let reduced = reduce_tau(&seq.tau, mf as usize, r.t_a)?;
            let d = &lattice_shift + hfroots_core::numtheory::int(2 * reduced.min());
            let root = root_from_tau(&reduced);
            let mut c = if reduced == r.tau && d == r.d_invariant {
                check(CheckStatus::Agree, format!("tau and d = {d} agree"))
            } else {
                check(CheckStatus::Disagree, format!("Laufer gives d = {d}"))
            };
            c.tau = Some(reduced.values().to_vec());
            oracle_root = Some(root);
            Ok(c)
        });
        let laufer = laufer.transpose()?;

        let sublevel = oracle.sublevel().then(|| {
            let g = lattice.graph();
            if g.len() > SUBLEVEL_MAX_VERTICES {
                return Ok(check(
                    CheckStatus::Skipped,
                    format!(
                        "graph has {} vertices (limit {SUBLEVEL_MAX_VERTICES})",
                        g.len()
                    ),
                ));
            }
            let reference = oracle_root.as_ref().unwrap_or(&r.root);
            let n_max = reference.chi(reference.top());
            let bx = SublevelBox::certified(g, &class.kr, n_max)?;
            match sublevel_root(g, &class.kr, n_max, &bx) {
                Ok(out) => Ok(match out.root {
                    Some(root) if isomorphic(&root, &r.root) => check(
                        CheckStatus::Agree,
                        format!(
                            "{} minima from {} lattice points",
                            root.leaves().len(),
                            out.points
                        ),
                    ),
                    Some(_) => check(CheckStatus::Disagree, "sublevel root is not isomorphic"),
                    None => check(CheckStatus::Disagree, "sublevel set is empty"),
                }),
                Err(e @ (Error::BoxTooLarge { .. } | Error::BoxBoundaryContact)) => {
                    Ok(check(CheckStatus::Inconclusive, e.to_string()))
                }
                Err(e) => Err(e),
            }
        });
        let sublevel = sublevel.transpose()?;

        classes.push(ClassVerification {
            a: r.a,
            lattice_shift,
            formula_shift,
            shift_agrees,
            laufer,
            sublevel,
        });
    }
    Ok(VerificationReport {
        oracle: oracle.name().into(),
        graph_vertices: lattice.graph().len(),
        agree: classes.iter().all(|c| !c.disagrees()),
        classes,
    })
}

/// Compares the `delta = 0` formula with the classical recursion.
pub fn verify_lens(p: i64, q: i64) -> Result<LensReport, Error> {
    let d = lens_d_invariants(p, q)?;
    let classes: Vec<LensClass> = d
        .into_iter()
        .enumerate()
        .map(|(a, d_formula)| {
            let a = a as i64;
            let i = (a + q) % p;
            let d_recursive = lens_d_recursive(p, q % p, i);
            LensClass {
                a,
                i,
                agree: d_formula == d_recursive,
                d_formula,
                d_recursive,
            }
        })
        .collect();
    Ok(LensReport {
        p,
        q,
        agree: classes.iter().all(|c| c.agree),
        classes,
        timings_us: None,
    })
}
