//! Command-line front end. Exit status: 0 success, 1 a check failed,
//! 2 bad usage or unreadable input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rk3::families::{self, Support};
use rk3::invariants::{self, InvariantRecord};
use rk3::ks::{self, KSEntry};
use rk3::polytope::LatticePolytope;
use rk3::store;
use rk3::symmetry;

#[derive(Parser)]
#[command(name = "rk3", version, about = "Invariants of reflexive polytopes and their K3 hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// KS-format polytope file
    #[arg(long = "in", env = "RK3_KS_PATH", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Print polar polytopes in KS format
    Polar {
        #[command(flatten)]
        input: Input,
        /// only this entry (0-based)
        #[arg(long)]
        index: Option<usize>,
    },
    /// Print lattice-point invariants
    Invariants {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Check rho_tor + delta + rho_tor(polar) = 20 and delta symmetry
    MirrorCheck {
        #[command(flatten)]
        input: Input,
        /// check every entry
        #[arg(long, conflicts_with = "index", required_unless_present = "index")]
        all: bool,
        #[arg(long)]
        index: Option<usize>,
    },
    /// List all reflexive polytopes of dimension 1 or 2 in KS format
    Enumerate {
        #[arg(long)]
        dim: usize,
    },
    /// List entries giving naturally one-parameter families
    SearchOneParam {
        #[command(flatten)]
        input: Input,
    },
    /// Invariant factors of the diagonal symplectic symmetry group of a pencil
    SymplTorus {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        index: usize,
        /// monomials of the pencil: polar vertices and origin, or all points
        #[arg(long, default_value = "vertices")]
        support: Support,
    },
    /// Compute invariant records for every entry into a store file
    Ingest {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "STORE")]
        out: PathBuf,
        /// worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// An error that maps to exit status 2.
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

fn load(input: &Input) -> Result<(Vec<KSEntry>, String), Fail> {
    let text = std::fs::read_to_string(&input.input)
        .map_err(|e| Fail(format!("{}: {e}", input.input.display())))?;
    let entries = ks::parse_ks(&text).map_err(|e| Fail(format!("{}: {e}", input.input.display())))?;
    for (i, e) in entries.iter().enumerate() {
        if e.is_ambiguous() {
            eprintln!("warning: entry {i} has a square matrix; reading columns as vertices");
        }
    }
    Ok((entries, store::source_digest(text.as_bytes())))
}

fn select(entries: &[KSEntry], index: Option<usize>) -> Result<Vec<(usize, &KSEntry)>, Fail> {
    match index {
        Some(i) => {
            let e = entries.get(i).ok_or_else(|| Fail(format!("index {i} out of range ({} entries)", entries.len())))?;
            Ok(vec![(i, e)])
        }
        None => Ok(entries.iter().enumerate().collect()),
    }
}

fn polytope(i: usize, e: &KSEntry) -> Result<LatticePolytope, Fail> {
    e.polytope().map_err(|err| Fail(format!("entry {i}: {err}")))
}

fn reflexive(i: usize, e: &KSEntry) -> Result<LatticePolytope, Fail> {
    let p = polytope(i, e)?;
    if !p.is_reflexive() {
        return Err(Fail(format!("entry {i}: polytope is not reflexive")));
    }
    Ok(p)
}

fn run(cli: Cli) -> Result<ExitCode, Fail> {
    match cli.command {
        Command::Polar { input, index } => {
            let (entries, _) = load(&input)?;
            for (i, e) in select(&entries, index)? {
                let p = polytope(i, e)?;
                let dual = p.polar().map_err(|err| Fail(format!("entry {i}: {err}")))?;
                print!("{}", KSEntry::from_polytope(&dual, None).to_ks_string());
            }
        }
        Command::Invariants { input, index } => {
            let (entries, _) = load(&input)?;
            for (i, e) in select(&entries, index)? {
                let p = reflexive(i, e)?;
                match p.dim() {
                    3 | 4 => {
                        let r = InvariantRecord::compute(&p).map_err(|err| Fail(format!("entry {i}: {err}")))?;
                        if r.k == 3 {
                            println!(
                                "index={i} ell={} ell_dual={} rho_tor={} delta={} rho_cor={}",
                                r.ell,
                                r.ell_dual,
                                r.rho_tor.unwrap_or_default(),
                                r.delta.unwrap_or_default(),
                                r.rho_cor.unwrap_or_default()
                            );
                        } else {
                            println!(
                                "index={i} ell={} ell_dual={} h11={} h_k21={}",
                                r.ell,
                                r.ell_dual,
                                r.h11.unwrap_or_default(),
                                r.h_k21.unwrap_or_default()
                            );
                        }
                    }
                    _ => {
                        let dual = p.polar()?;
                        println!("index={i} ell={} ell_dual={}", p.lattice_point_count(), dual.lattice_point_count());
                    }
                }
            }
        }
        Command::MirrorCheck { input, all: _, index } => {
            let (entries, _) = load(&input)?;
            let selected = select(&entries, index)?;
            let mut failed = 0;
            for &(i, e) in &selected {
                // an entry the check cannot apply to counts as a failure
                let checked = reflexive(i, e).and_then(|p| {
                    invariants::mirror_rank_check(&p).map_err(|err| Fail(format!("entry {i}: {err}")))
                });
                let m = match checked {
                    Ok(m) => m,
                    Err(Fail(msg)) => {
                        failed += 1;
                        println!("index={i} FAIL {msg}");
                        continue;
                    }
                };
                if !m.ok {
                    failed += 1;
                }
                println!(
                    "index={i} rho_tor={} delta={} rho_tor_dual={} delta_dual={} {}",
                    m.rho_tor,
                    m.delta,
                    m.rho_tor_dual,
                    m.delta_dual,
                    if m.ok { "ok" } else { "FAIL" }
                );
            }
            println!("checked {} failed {failed}", selected.len());
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Enumerate { dim } => {
            for nf in symmetry::enumerate_reflexive(dim)? {
                let p = nf.to_polytope()?;
                print!("{}", KSEntry::from_polytope(&p, None).to_ks_string());
            }
        }
        Command::SearchOneParam { input } => {
            let (entries, _) = load(&input)?;
            let polys = entries
                .iter()
                .enumerate()
                .map(|(i, e)| polytope(i, e))
                .collect::<Result<Vec<_>, _>>()?;
            for c in families::search_one_parameter(&polys) {
                let p = c.normal_form.to_polytope()?;
                let note = format!("group={} order={} facets={}", c.group, c.group_order, c.facet_count);
                print!("{}", KSEntry::from_polytope(&p, Some(note)).to_ks_string());
            }
        }
        Command::SymplTorus { input, index, support } => {
            let (entries, _) = load(&input)?;
            let (i, e) = select(&entries, Some(index))?[0];
            let p = reflexive(i, e)?;
            let s = families::support_points(&p, support)?;
            println!("{}", families::symplectic_torus_group(&p, &s)?);
        }
        Command::Ingest { input, out, jobs } => {
            let (entries, digest) = load(&input)?;
            let st = store::ingest(&entries, digest, jobs)?;
            std::fs::write(&out, store::write_records(&st)).map_err(|e| Fail(format!("{}: {e}", out.display())))?;
            eprintln!("{} entries, {} distinct classes", entries.len(), st.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Fail(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
