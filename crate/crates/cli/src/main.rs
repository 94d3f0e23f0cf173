mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tabsieve::klcells::{
    build_kl_table_with_cap, immanant, kl_immanant, mu_promotion_invariance, vanishing_criterion_check,
    verify_promotion_identity,
};
use tabsieve::permrsk::Permutation;
use tabsieve::ribbon::{count_ribbon_cst, kf_root_of_unity_check};
use tabsieve::sieve::{
    bn_words_csp, content_csp_check, cst_csp, dihedral_report, dihedral_syt_report, handshake_csp, multiset_csp,
    noncrossing_csp, promotion_action, subset_csp, syt_csp_with_modulus,
};
use tabsieve::tabcore::{Composition, Partition};
use tabsieve::Error;

use config::Limits;
use render::Outcome;

#[derive(Parser, Debug)]
#[command(name = "tabsieve", version, about = "Cyclic sieving checks for tableaux and related families")]
struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Enumeration cap (number of objects).
    #[arg(long, global = true, env = "TABSIEVE_CAP")]
    cap: Option<usize>,
    /// Largest symmetric-group rank for Kazhdan-Lusztig tables.
    #[arg(long, global = true, env = "TABSIEVE_KL_RANK_CAP")]
    kl_rank_cap: Option<usize>,
    /// TOML file with `cap` and `kl_rank_cap` keys.
    #[arg(long, global = true, env = "TABSIEVE_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List tableaux of a shape with promotion orbit data.
    Enumerate(EnumerateArgs),
    /// Cyclic sieving checks.
    #[command(subcommand)]
    Csp(CspCommand),
    /// Fixed points of evacuation and evacuation after promotion.
    Dihedral(DihedralArgs),
    /// Kazhdan-Lusztig tables, cell identities and immanants.
    #[command(subcommand)]
    Kl(KlCommand),
    /// Ribbon tableau counts and root-of-unity checks.
    #[command(subcommand)]
    Ribbon(RibbonCommand),
}

fn parse_shape(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_content(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args, Debug)]
struct ShapeArg {
    /// Partition such as `3,3,1` or `3^2` (two rows of length 3).
    #[arg(long, value_parser = parse_shape)]
    shape: Partition,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    shape: ShapeArg,
    /// Largest entry; standard tableaux when omitted.
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_parser = parse_content)]
    content: Option<Composition>,
    #[arg(long, default_value_t = 1)]
    power: usize,
    /// Print the tableaux themselves.
    #[arg(long)]
    list: bool,
}

#[derive(Subcommand, Debug)]
enum CspCommand {
    /// Promotion on standard tableaux against the q-hook formula.
    Syt {
        #[command(flatten)]
        shape: ShapeArg,
        /// Root-of-unity order; defaults to the number of cells.
        #[arg(long)]
        modulus: Option<usize>,
    },
    /// Promotion on column-strict tableaux with bounded entries.
    Cst {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        bound: usize,
    },
    /// Powers of promotion on tableaux of fixed content (modulus form).
    Content {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, value_parser = parse_content)]
        content: Composition,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Rotation of noncrossing perfect matchings of 2n points.
    Handshake {
        #[arg(long)]
        n: usize,
    },
    /// Kreweras complementation on noncrossing partitions of n.
    Noncrossing {
        #[arg(long)]
        n: usize,
    },
    /// Rotation of reduced words for the long element of B_n.
    Bnwords {
        #[arg(long)]
        n: usize,
    },
    /// Rotation of k-subsets of [n].
    Subsets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Rotation of k-multisets of [n].
    Multisets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args, Debug)]
struct DihedralArgs {
    #[command(flatten)]
    shape: ShapeArg,
    /// Entry bound for column-strict tableaux; standard tableaux when omitted.
    #[arg(long)]
    bound: Option<usize>,
    /// Judge by the revised reflection formula instead of the case formula.
    #[arg(long)]
    revised: bool,
}

#[derive(Subcommand, Debug)]
enum KlCommand {
    /// Build the table for S_n and check its defining properties.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Long-cycle matrix identity on a rectangular cell.
    VerifyPromotion {
        #[command(flatten)]
        shape: ShapeArg,
    },
    /// Promotion invariance of mu on a cell.
    MuInvariance {
        #[command(flatten)]
        shape: ShapeArg,
    },
    /// Expansion of a Kazhdan-Lusztig immanant.
    Immanants {
        /// One-line notation, e.g. `3412`.
        #[arg(long, value_parser = parse_perm)]
        perm: Permutation,
        /// Row blocks; evaluates on the generic block matrix when given.
        #[arg(long, value_parser = parse_content)]
        alpha: Option<Composition>,
        /// Column blocks; defaults to all ones.
        #[arg(long, value_parser = parse_content)]
        beta: Option<Composition>,
    },
    /// Vanishing criterion over all of S_n.
    Vanishing {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum RibbonCommand {
    /// Column-strict ribbon tableaux of a shape with given content.
    Count {
        #[command(flatten)]
        shape: ShapeArg,
        /// Ribbon length.
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_content)]
        content: Composition,
    },
    /// Kostka-Foulkes value at a primitive d-th root against ribbon counts.
    KfCheck {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, value_parser = parse_content)]
        content: Composition,
        #[arg(long)]
        d: usize,
    },
}

fn run(cli: &Cli, limits: &Limits) -> tabsieve::Result<Outcome> {
    let cap = limits.cap;
    let json = cli.json;
    match &cli.command {
        Command::Enumerate(a) => {
            let k = a.bound.unwrap_or(a.shape.shape.size());
            let content = match (&a.content, a.bound) {
                (Some(c), _) => Some(c.clone()),
                (None, None) => Some(Composition::ones(k)),
                (None, Some(_)) => None,
            };
            let action = promotion_action(&a.shape.shape, k, content.as_ref(), a.power, cap)?;
            Ok(render::enumeration(&a.shape.shape, k, a.power, &action, a.list, json))
        }
        Command::Csp(c) => {
            let report = match c {
                CspCommand::Syt { shape, modulus } => {
                    let m = modulus.unwrap_or(shape.shape.size());
                    syt_csp_with_modulus(&shape.shape, m, cap)?
                }
                CspCommand::Cst { shape, bound } => cst_csp(&shape.shape, *bound, cap)?,
                CspCommand::Content { shape, content, power } => content_csp_check(&shape.shape, content, *power, cap)?,
                CspCommand::Handshake { n } => handshake_csp(*n)?,
                CspCommand::Noncrossing { n } => noncrossing_csp(*n)?,
                CspCommand::Bnwords { n } => bn_words_csp(*n, cap)?,
                CspCommand::Subsets { n, k } => subset_csp(*n, *k)?,
                CspCommand::Multisets { n, k } => multiset_csp(*n, *k)?,
            };
            Ok(render::csp(&report, json))
        }
        Command::Dihedral(a) => {
            let report = match a.bound {
                Some(k) => dihedral_report(&a.shape.shape, k, cap)?,
                None => dihedral_syt_report(&a.shape.shape, cap)?,
            };
            Ok(render::dihedral(&report, a.revised, json))
        }
        Command::Kl(k) => {
            let table = |n: usize| build_kl_table_with_cap(n, limits.kl_rank_cap);
            match k {
                KlCommand::Table { n } => Ok(render::kl_table(&table(*n)?, json)),
                KlCommand::VerifyPromotion { shape } => {
                    let t = table(shape.shape.size())?;
                    Ok(render::promotion_identity(&verify_promotion_identity(&t, &shape.shape)?, json))
                }
                KlCommand::MuInvariance { shape } => {
                    let t = table(shape.shape.size())?;
                    Ok(render::mu_invariance(&mu_promotion_invariance(&t, &shape.shape)?, json))
                }
                KlCommand::Immanants { perm, alpha, beta } => {
                    let t = table(perm.n())?;
                    match alpha {
                        None => Ok(render::immanant(&immanant(&t, perm)?, json)),
                        Some(al) => {
                            let be = beta.clone().unwrap_or_else(|| Composition::ones(perm.n()));
                            let poly = kl_immanant(&t, perm, al, &be)?;
                            Ok(render::block_immanant(perm, al, &be, &poly, json))
                        }
                    }
                }
                KlCommand::Vanishing { n } => Ok(render::vanishing(&vanishing_criterion_check(&table(*n)?, *n)?, json)),
            }
        }
        Command::Ribbon(r) => match r {
            RibbonCommand::Count { shape, m, content } => {
                let count = count_ribbon_cst(&shape.shape, *m, content)?;
                Ok(render::ribbon_count(&shape.shape, *m, content, count, json))
            }
            RibbonCommand::KfCheck { shape, content, d } => {
                Ok(render::kf_check(&kf_root_of_unity_check(&shape.shape, content, *d, cap)?, json))
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match Limits::resolve(cli.cap, cli.kl_rank_cap, cli.config.as_deref()) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&cli, &limits) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(if outcome.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
