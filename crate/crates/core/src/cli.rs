//! Command-line front end. Every verb prints one JSON document on stdout.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactpoly::euler_value;
use crate::io::{read_json, GroupFile};
use crate::orbifold::{orbifold_hodge, OrbifoldInput};
use crate::polytope::LatticePolytope;
use crate::quotient::DEFAULT_CAP;
use crate::stringy::{self, Mode, StrataFile};
use crate::triangulation::{verify_fiber_identity, PlacementOrder};

#[derive(Debug, Parser)]
#[command(name = "stringhodge", version, about = "Exact stringy Hodge invariants")]
pub struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lattice polytopes.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Finite subgroups of GL(d) in monomial form.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Triangulations.
    #[command(subcommand)]
    Tri(TriCmd),
    /// Stringy E-polynomials.
    #[command(subcommand)]
    Stringy(StringyCmd),
    /// Orbifold Hodge numbers.
    #[command(subcommand)]
    Orbifold(OrbifoldCmd),
}

#[derive(Debug, Subcommand)]
pub enum PolyCmd {
    /// Dimension, faces, lattice points, reflexivity.
    Info { file: PathBuf },
    /// Polar dual polytope.
    Dual { file: PathBuf },
    /// Ehrhart S-polynomial, and S-tilde for simplices.
    Spoly { file: PathBuf },
    /// Box points of a simplex with their heights.
    Box { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Order and conjugacy classes with age data.
    Info {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// S and S-tilde from the age census.
    Spoly {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Compare an abelian diagonal group with its simplex.
    Bridge {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Lex,
    ReverseLex,
}

#[derive(Debug, Subcommand)]
pub enum TriCmd {
    /// Check the cell sum of a placing triangulation against Ehrhart data.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "lex")]
        order: OrderArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum StringyCmd {
    /// E_st of the toric Fano variety of a reflexive polytope.
    Fano { file: PathBuf },
    /// E_st of the generic anticanonical hypersurface.
    Hyp {
        file: PathBuf,
        /// Only the `u = 1` specialization; accepts any reflexive polytope.
        #[arg(long)]
        u1: bool,
    },
    /// Euler number of the hypersurface from face volumes.
    Euler { file: PathBuf },
    /// h^{p,1} of the hypersurface from interior point counts.
    Hp1 {
        file: PathBuf,
        #[arg(long)]
        p: usize,
    },
    /// E_st of both sides of a reflexive pair and the mirror check.
    Mirror { file: PathBuf },
    /// Closed-form invariants of the degree d+1 Fermat hypersurface.
    Dwork {
        #[arg(long)]
        d: usize,
    },
    /// E_st from a stratification file.
    Strata { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum OrbifoldCmd {
    /// Orbifold Hodge diamond from sector data.
    Hodge { file: PathBuf },
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    Ok(serde_json::to_value(x)?)
}

fn poly(cmd: PolyCmd) -> Result<Value> {
    match cmd {
        PolyCmd::Info { file } => {
            let p: LatticePolytope = read_json(&file)?;
            let f_vector: Vec<usize> = p.face_lattice().iter().map(Vec::len).collect();
            let facets = if p.is_full_dimensional() { Some(p.facet_representation()?) } else { None };
            Ok(json!({
                "ambient_dim": p.ambient_dim(),
                "dim": p.dim(),
                "num_vertices": p.num_vertices(),
                "is_simplex": p.is_simplex(),
                "is_reflexive": p.is_reflexive(),
                "f_vector": f_vector,
                "facets": facets,
                "lattice_points": p.count_points(1, false),
                "interior_points": p.count_points(1, true),
                "normalized_volume": p.normalized_volume(),
            }))
        }
        PolyCmd::Dual { file } => to_value(&read_json::<LatticePolytope>(&file)?.polar_dual()?),
        PolyCmd::Spoly { file } => {
            let p: LatticePolytope = read_json(&file)?;
            let s_tilde = if p.is_simplex() { Some(p.box_polynomials()?.1) } else { None };
            Ok(json!({ "s": p.s_polynomial(), "s_tilde": s_tilde }))
        }
        PolyCmd::Box { file } => to_value(&read_json::<LatticePolytope>(&file)?.box_points()?),
    }
}

fn group(cmd: GroupCmd) -> Result<Value> {
    match cmd {
        GroupCmd::Info { file, cap } => {
            let g = read_json::<GroupFile>(&file)?.generate(cap)?;
            let classes: Vec<Value> = g
                .classes()
                .iter()
                .zip(g.weight_profile())
                .map(|(c, w)| {
                    Ok(json!({
                        "representative": to_value(&c.representative)?,
                        "size": w.size,
                        "wt": to_value(&w)?["wt"],
                        "ht": w.ht,
                    }))
                })
                .collect::<Result<_>>()?;
            Ok(json!({
                "degree": g.degree(),
                "order": g.order(),
                "is_abelian_diagonal": g.is_abelian_diagonal(),
                "classes": classes,
            }))
        }
        GroupCmd::Spoly { file, cap } => {
            let (s, s_tilde) = read_json::<GroupFile>(&file)?.generate(cap)?.s_polynomials()?;
            Ok(json!({ "s": s, "s_tilde": s_tilde }))
        }
        GroupCmd::Bridge { file, cap } => {
            let g = read_json::<GroupFile>(&file)?.generate(cap)?;
            let simplex = g.abelian_simplex_bridge()?;
            let from_group = g.s_polynomials()?;
            let from_simplex = simplex.box_polynomials()?;
            if from_group != from_simplex {
                return Err(Error::IdentityViolation(format!(
                    "group S-polynomials {:?} differ from simplex {:?}",
                    from_group, from_simplex
                )));
            }
            Ok(json!({ "simplex": simplex, "s": from_group.0, "s_tilde": from_group.1 }))
        }
    }
}

fn with_diamond(e: &crate::BivariateLaurent) -> Value {
    json!({ "e_st": e, "hodge_diamond": e.hodge_numbers(), "euler": euler_value(e) })
}

fn stringy(cmd: StringyCmd) -> Result<Value> {
    match cmd {
        StringyCmd::Fano { file } => Ok(with_diamond(&stringy::e_st_fano(&read_json(&file)?)?)),
        StringyCmd::Hyp { file, u1 } => {
            let mode = if u1 { Mode::UEqualsOne } else { Mode::FullSimplex };
            to_value(&stringy::e_st_hypersurface(&read_json(&file)?, mode)?)
        }
        StringyCmd::Euler { file } => {
            let p: LatticePolytope = read_json(&file)?;
            Ok(json!({
                "euler": stringy::e_st_hyp_euler(&p)?,
                "face_volume_pairing_sum": stringy::face_volume_pairing_sum(&p)?,
            }))
        }
        StringyCmd::Hp1 { file, p } => {
            let h = stringy::h_st_p1(&read_json(&file)?, p)?;
            Ok(json!({ "p": p, "h_p1": h }))
        }
        StringyCmd::Mirror { file } => to_value(&stringy::mirror_check(&read_json(&file)?)?),
        StringyCmd::Dwork { d } => to_value(&stringy::dwork_invariants(d)?),
        StringyCmd::Strata { file } => {
            let f: StrataFile = read_json(&file)?;
            let r = stringy::e_st_stratified(&f.strata)?;
            let mut v = with_diamond(&r.e_st);
            v["from_open_strata"] = to_value(&r.from_open_strata)?;
            v["from_closures"] = to_value(&r.from_closures)?;
            Ok(v)
        }
    }
}

fn dispatch(command: Command) -> Result<Value> {
    match command {
        Command::Poly(c) => poly(c),
        Command::Group(c) => group(c),
        Command::Tri(TriCmd::Verify { file, order }) => {
            let order = match order {
                OrderArg::Lex => PlacementOrder::Lex,
                OrderArg::ReverseLex => PlacementOrder::ReverseLex,
            };
            let r = verify_fiber_identity(&read_json(&file)?, order)?;
            if !r.equal {
                return Err(Error::IdentityViolation(format!(
                    "cell census gives {} but Ehrhart gives {}",
                    r.s_from_cells, r.s_from_ehrhart
                )));
            }
            to_value(&r)
        }
        Command::Stringy(c) => stringy(c),
        Command::Orbifold(OrbifoldCmd::Hodge { file }) => {
            to_value(&orbifold_hodge(&read_json::<OrbifoldInput>(&file)?)?)
        }
    }
}

/// Parses `args` (including the program name) and runs the verb.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let pretty = cli.pretty;
    let rendered = dispatch(cli.command).and_then(|v| {
        let s = if pretty { serde_json::to_string_pretty(&v) } else { serde_json::to_string(&v) };
        Ok(s?)
    });
    match rendered {
        Ok(s) => Outcome { code: 0, stdout: s + "\n", stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
