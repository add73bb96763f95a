use std::time::Instant;

use pconn::colored::{is_k_proper_connected, is_proper_connected, DEFAULT_PATH_CAP};
use pconn::constructions::{
    color_cycle_chord, color_dense_three, color_dense_two, color_dirac_pc2, color_general, color_ore_pc2,
};
use pconn::families::{dense_thresholds, gen_gk, gen_random_graph, gen_srt, RandomConstraint};
use pconn::solver::{pc_exact, pc_k_exact};
use pconn::{Budget, Graph, Result};

pub const SUITES: [&str; 8] = ["landmarks", "cycle-chord", "gk", "srt", "dirac", "ore", "dense", "all"];

pub struct Row {
    pub suite: &'static str,
    pub case: String,
    pub pass: bool,
    pub detail: String,
}

struct Runner {
    rows: Vec<Row>,
    budget: Budget,
}

impl Runner {
    fn record(&mut self, suite: &'static str, case: String, outcome: Result<(bool, String)>) {
        let (pass, detail) = outcome.unwrap_or_else(|e| (false, e.to_string()));
        self.rows.push(Row {
            suite,
            case,
            pass,
            detail,
        });
    }

    fn expect_value(&mut self, suite: &'static str, case: String, got: Result<usize>, want: usize) {
        let outcome = got.map(|v| (v == want, format!("got {v}, expected {want}")));
        self.record(suite, case, outcome);
    }

    fn landmarks(&mut self) {
        let b = self.budget;
        for n in 3..=7 {
            let v = pc_exact(&Graph::complete(n), b).map(|r| r.value);
            self.expect_value("landmarks", format!("pc(K{n})"), v, 1);
        }
        for m in 2..=5 {
            let v = pc_exact(&Graph::star(m), b).map(|r| r.value);
            self.expect_value("landmarks", format!("pc(K1,{m})"), v, m);
        }
        let v = pc_k_exact(&Graph::cycle(5), 2, b).map(|r| r.value);
        self.expect_value("landmarks", "pc2(C5)".into(), v, 3);
        let v = pc_k_exact(&Graph::cycle(4), 2, b).map(|r| r.value);
        self.expect_value("landmarks", "pc2(C4)".into(), v, 2);
        for n in 4..=6 {
            let v = pc_k_exact(&Graph::complete(n), 2, b).map(|r| r.value);
            self.expect_value("landmarks", format!("pc2(K{n})"), v, 2);
        }
    }

    fn cycle_chord(&mut self) {
        for n in 4..=16 {
            let outcome = color_cycle_chord(n).and_then(|(g, c)| {
                let report = is_k_proper_connected(&g, &c.coloring, 2, DEFAULT_PATH_CAP)?;
                Ok((report.holds && c.palette() == 2, format!("palette {}", c.palette())))
            });
            self.record("cycle-chord", format!("n={n}"), outcome);
        }
    }

    fn gk(&mut self) {
        for n in 5..=9 {
            for k in 1..=3.min(n - 4) {
                // K3 with two pendants on one vertex needs 3 colors
                let want = if (n, k) == (5, 1) { 3 } else { k + 1 };
                let v = gen_gk(n, k).and_then(|g| pc_exact(&g, self.budget)).map(|r| r.value);
                self.expect_value("gk", format!("n={n},k={k}"), v, want);
            }
        }
    }

    fn srt(&mut self) {
        for r in 4..=6 {
            for t in 2..=3 {
                let outcome = gen_srt(r, t).and_then(|g| {
                    let c = color_general(&g, self.budget)?;
                    Ok((c.palette() == r.max(3), format!("palette {}", c.palette())))
                });
                self.record("srt", format!("r={r},t={t}"), outcome);
            }
        }
    }

    fn seeded<F>(&mut self, suite: &'static str, seeds: u64, constraint: fn(usize) -> RandomConstraint, color: F)
    where
        F: Fn(&Graph, Budget) -> Result<pconn::constructions::Construction>,
    {
        for n in 6..=12 {
            let mut failures = Vec::new();
            for seed in 0..seeds {
                let outcome = gen_random_graph(n, constraint(n), seed).and_then(|g| {
                    let c = color(&g, self.budget)?;
                    let report = is_k_proper_connected(&g, &c.coloring, 2, DEFAULT_PATH_CAP)?;
                    Ok(report.holds && c.palette() == 2)
                });
                match outcome {
                    Ok(true) => {}
                    Ok(false) => failures.push(format!("seed {seed}: not verified")),
                    Err(e) => failures.push(format!("seed {seed}: {e}")),
                }
            }
            let detail = if failures.is_empty() {
                format!("{seeds} graphs")
            } else {
                failures.join("; ")
            };
            self.rows.push(Row {
                suite,
                case: format!("n={n}"),
                pass: failures.is_empty(),
                detail,
            });
        }
    }

    fn dense(&mut self, seeds: u64) {
        for n in 14..=16 {
            let t = dense_thresholds(n).expect("n >= 14");
            let (lo, hi) = (t.two_lo.expect("n >= 14"), t.two_hi.expect("n >= 14"));
            for seed in 0..seeds {
                let m = lo + (seed as usize * 7) % (hi - lo + 1);
                let outcome = gen_random_graph(n, RandomConstraint::EdgeCount(m), seed).and_then(|g| {
                    let c = color_dense_two(&g, self.budget)?;
                    let holds = is_proper_connected(&g, &c.coloring)?.holds;
                    Ok((holds && c.palette() == 2, c.provenance.join("; ")))
                });
                self.record("dense", format!("two n={n},m={m},seed={seed}"), outcome);
            }
            if let Some(lo3) = t.three_lo {
                for seed in 0..seeds {
                    let m = lo3 + (seed as usize * 5) % 20;
                    let outcome = gen_random_graph(n, RandomConstraint::EdgeCount(m), seed).and_then(|g| {
                        let c = color_dense_three(&g, self.budget)?;
                        let holds = is_proper_connected(&g, &c.coloring)?.holds;
                        Ok((holds && c.palette() <= 3, c.provenance.join("; ")))
                    });
                    self.record("dense", format!("three n={n},m={m},seed={seed}"), outcome);
                }
            }
        }
    }
}

/// Runs a named suite; `seeds` is the number of random graphs per size.
pub fn run_suite(name: &str, seeds: u64, budget: Budget) -> Option<(Vec<Row>, std::time::Duration)> {
    let start = Instant::now();
    let mut r = Runner {
        rows: Vec::new(),
        budget,
    };
    let all = name == "all";
    let mut matched = false;
    if all || name == "landmarks" {
        matched = true;
        r.landmarks();
    }
    if all || name == "cycle-chord" {
        matched = true;
        r.cycle_chord();
    }
    if all || name == "gk" {
        matched = true;
        r.gk();
    }
    if all || name == "srt" {
        matched = true;
        r.srt();
    }
    if all || name == "dirac" {
        matched = true;
        r.seeded("dirac", seeds, |n| RandomConstraint::MinDegree(n.div_ceil(2)), color_dirac_pc2);
    }
    if all || name == "ore" {
        matched = true;
        r.seeded("ore", seeds, |_| RandomConstraint::OreSum, color_ore_pc2);
    }
    if all || name == "dense" {
        matched = true;
        r.dense(seeds);
    }
    matched.then(|| (r.rows, start.elapsed()))
}
