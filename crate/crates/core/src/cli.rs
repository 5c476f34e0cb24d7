//! Command-line front end.
//!
//! Exit codes: 0 when every verdict holds, 1 when some verdict fails, 2 for
//! unusable input, 3 when two computations that must agree do not.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::assembly::{
    assemble_hulls, build_strong_semilattice, strong_semilattice_ample_check, SemilatticeDiagram,
};
use crate::closure::DEFAULT_BUDGET;
use crate::enumerate::{enumerate_semigroups, Filters};
use crate::equiv::{
    bicyclic_mu_check, bis_naturality, bis_round_trip, functor_f, lac_naturality, lac_round_trip,
    nat_bicyclic_round_trip, BisObject, LacObject,
};
use crate::error::{Error, Result};
use crate::format::parse_map;
use crate::hull::{
    check_l_transfer, check_meet_factorisation, check_quotient_charts, inverse_hull_with_budget,
    lc_failure,
};
use crate::inverse::recognize_inverse;
use crate::iorder::{e_unitary_check, r_class_union_suite, SubsetEmbedding};
use crate::lifting::{is_lc_preserving, lift_morphism, two_one_morphisms, LiftOutcome};
use crate::relations::{green, left_ample, r_star, RelationKind, RelationTable};
use crate::symbolic::{SymbolicKind, SymbolicSemigroup};
use crate::table::{Elem, FiniteSemigroup};

#[derive(Parser, Debug)]
#[command(
    name = "iquot",
    version,
    about = "Left I-orders, inverse hulls and their morphisms on finite semigroups"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural verdicts for a Cayley table.
    Check(CheckArgs),
    /// Inverse hull of a left ample semigroup.
    Hull {
        table: PathBuf,
        /// Maximum number of hull elements.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// A subsemigroup inside an inverse semigroup.
    Iorder(IorderArgs),
    /// Lift a morphism between left I-orders to their ambient semigroups.
    Lift {
        q: PathBuf,
        s: String,
        p: PathBuf,
        t: String,
        /// `i -> j` lines over ambient indices of members.
        phi: PathBuf,
    },
    /// Build a strong semilattice from a diagram file and assemble hulls.
    Assemble { diagram: PathBuf },
    /// Round trips between left ample and bisimple inverse objects.
    Equiv {
        #[command(subcommand)]
        action: EquivAction,
    },
    /// Enumerate semigroups of a given order.
    Enumerate(EnumerateArgs),
    /// Materialise a window of a built-in infinite semigroup.
    Builtin {
        kind: SymbolicKind,
        #[arg(long, default_value_t = 10)]
        window: u64,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    table: PathBuf,
    #[arg(long)]
    ample: bool,
    #[arg(long)]
    lc: bool,
    #[arg(long)]
    inverse: bool,
    /// Dump a relation: R, L, H, D, J, Rstar, leqR, leqL, sigma.
    #[arg(long)]
    relation: Option<RelationKind>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    /// Transfer statements for S a union of R-classes of Q.
    RClasses,
    /// Three-way E-unitary equivalence.
    EUnitary,
}

#[derive(Args, Debug)]
struct IorderArgs {
    /// Cayley table of Q, or a built-in name with --builtin.
    q: String,
    /// Members of S: a file or a list like `0,2,3`.
    members: Option<String>,
    /// Use the built-in bicyclic monoid with S = {(0, n)}.
    #[arg(long)]
    builtin: bool,
    #[arg(long, default_value_t = 20)]
    window: u64,
    #[arg(long, value_enum)]
    suite: Option<Suite>,
}

#[derive(Subcommand, Debug)]
enum EquivAction {
    /// An object file (a table, with `# members:` for a pair (Q, S)) or a
    /// built-in (`nat`, `bicyclic`) with --builtin.
    Roundtrip {
        object: String,
        #[arg(long)]
        builtin: bool,
        #[arg(long, default_value_t = 20)]
        window: u64,
    },
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(short = 'n', long)]
    order: usize,
    #[arg(long)]
    ample: bool,
    #[arg(long)]
    lc: bool,
    #[arg(long)]
    inverse: bool,
    /// One representative per isomorphism class.
    #[arg(long)]
    dedup: bool,
    /// Print every table.
    #[arg(long)]
    print: bool,
}

/// One claim and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub lines: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub verdicts: Vec<Verdict>,
    pub sections: Vec<Section>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings_ms: Option<Vec<(String, f64)>>,
}

impl Report {
    fn verdict(&mut self, claim: impl Into<String>, holds: bool, witness: Option<String>) {
        self.verdicts.push(Verdict {
            claim: claim.into(),
            holds,
            witness,
        });
    }

    fn section(&mut self, title: impl Into<String>, lines: Vec<String>) {
        self.sections.push(Section {
            title: title.into(),
            lines,
        });
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            out.push_str(&format!("== {}\n", s.title));
            for l in &s.lines {
                out.push_str(l);
                out.push('\n');
            }
        }
        for v in &self.verdicts {
            out.push_str(&format!("{}: {}", v.claim, v.holds));
            if let Some(w) = &v.witness {
                out.push_str(&format!(" (witness: {w})"));
            }
            out.push('\n');
        }
        if let Some(t) = &self.timings_ms {
            for (k, ms) in t {
                out.push_str(&format!("time {k}: {ms:.1} ms\n"));
            }
        }
        out
    }
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Consistency(_) => 3,
        _ => 2,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut report = Report {
        command: args
            .iter()
            .skip(1)
            .map(|a| a.to_string_lossy().into_owned())
            .collect(),
        verdicts: Vec::new(),
        sections: Vec::new(),
        timings_ms: None,
    };
    let start = Instant::now();
    let result = dispatch(&cli.command, &mut report);
    if cli.timings {
        report.timings_ms = Some(vec![("total".into(), start.elapsed().as_secs_f64() * 1e3)]);
    }
    match result {
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Ok(()) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&report).expect("report serialises");
                s.push('\n');
                s
            } else {
                report.to_human()
            };
            Outcome {
                code: if report.all_hold() { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn load_table(path: &Path) -> Result<FiniteSemigroup> {
    FiniteSemigroup::parse(&read(path)?)
}

/// A member list given inline (`0,2,3` or `0 2 3`) or as a file of indices.
fn parse_members(arg: &str) -> Result<Vec<Elem>> {
    let text = if Path::new(arg).is_file() {
        read(Path::new(arg))?
    } else {
        arg.to_string()
    };
    let body: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    let members: Vec<Elem> = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::input(format!("bad member index {t:?}")))
        })
        .collect::<Result<_>>()?;
    if members.is_empty() {
        return Err(Error::input("no members given"));
    }
    Ok(members)
}

fn names(s: &FiniteSemigroup, xs: &[Elem]) -> String {
    xs.iter().map(|&x| s.name(x)).collect::<Vec<_>>().join(", ")
}

fn embedding(
    q: &FiniteSemigroup,
    members: Vec<Elem>,
) -> Result<SubsetEmbedding<crate::inverse::FiniteInverse>> {
    let inv =
        recognize_inverse(q).map_err(|f| Error::input(format!("ambient is not inverse: {f}")))?;
    SubsetEmbedding::new(inv, members)
}

fn dispatch(cmd: &Command, r: &mut Report) -> Result<()> {
    match cmd {
        Command::Check(a) => check(a, r),
        Command::Hull { table, budget } => hull(table, *budget, r),
        Command::Iorder(a) => iorder(a, r),
        Command::Lift { q, s, p, t, phi } => lift(q, s, p, t, phi, r),
        Command::Assemble { diagram } => assemble(diagram, r),
        Command::Equiv {
            action:
                EquivAction::Roundtrip {
                    object,
                    builtin,
                    window,
                },
        } => equiv(object, *builtin, *window, r),
        Command::Enumerate(a) => enumerate(a, r),
        Command::Builtin { kind, window } => builtin(*kind, *window, r),
    }
}

fn check(a: &CheckArgs, r: &mut Report) -> Result<()> {
    let s = load_table(&a.table)?;
    let all = !(a.ample || a.lc || a.inverse || a.relation.is_some());
    if a.ample || all {
        match left_ample(&s) {
            Ok(_) => r.verdict("left_ample", true, None),
            Err(f) => r.verdict(
                "left_ample",
                false,
                Some(format!("{}: {}", f.clause(), names(&s, &f.witness()))),
            ),
        }
    }
    if a.lc || all {
        let w = lc_failure(&s)
            .map(|(x, y)| format!("S{} ∩ S{} is not principal", s.name(x), s.name(y)));
        r.verdict("lc", w.is_none(), w);
    }
    if a.inverse || all {
        match recognize_inverse(&s) {
            Ok(_) => r.verdict("inverse", true, None),
            Err(f) => r.verdict("inverse", false, Some(f.to_string())),
        }
    }
    if let Some(kind) = a.relation {
        let g = green(&s);
        let rel: RelationTable = match kind {
            RelationKind::R => g.r,
            RelationKind::L => g.l,
            RelationKind::H => g.h,
            RelationKind::D => g.d,
            RelationKind::J => g.j,
            RelationKind::LeqR => g.leq_r,
            RelationKind::LeqL => g.leq_l,
            RelationKind::Rstar => r_star(&s),
            RelationKind::Sigma => crate::inverse::sigma_relation(&s),
            RelationKind::Composite => crate::relations::rstar_l(&s),
        };
        r.section("relation", rel.dump().lines().map(str::to_string).collect());
    }
    Ok(())
}

fn hull(path: &Path, budget: usize, r: &mut Report) -> Result<()> {
    let s = load_table(path)?;
    let h = inverse_hull_with_budget(&s, budget)?;
    check_quotient_charts(&h)?;
    check_l_transfer(&h)?;
    check_meet_factorisation(&h)?;
    r.section(
        "hull",
        h.inverse
            .semigroup()
            .to_text()
            .lines()
            .map(str::to_string)
            .collect(),
    );
    r.section(
        "embedding",
        s.elements()
            .map(|a| {
                format!(
                    "{} -> {}: {}",
                    s.name(a),
                    h.embedding[a],
                    h.charts.charts[h.embedding[a]]
                )
            })
            .collect(),
    );
    let mut lc_lines = Vec::new();
    for a in s.elements() {
        for b in s.elements() {
            let w = h.lc.witnesses[a][b].map_or("none".to_string(), |c| s.name(c));
            lc_lines.push(format!("{} {} -> {w}", s.name(a), s.name(b)));
        }
    }
    r.section("lc", lc_lines);
    let missing = s
        .elements()
        .flat_map(|a| s.elements().map(move |b| (a, b)))
        .find(|&(a, b)| h.lc.witnesses[a][b].is_none());
    r.verdict(
        "lc",
        h.lc.holds,
        missing.map(|(a, b)| format!("S{} ∩ S{} is not principal", s.name(a), s.name(b))),
    );
    let uncovered = h.inverse.elements().find(|&q| {
        !s.elements()
            .any(|a| s.elements().any(|b| h.quotient_of(a, b) == q))
    });
    r.verdict(
        "left_i_order",
        h.is_i_order,
        uncovered.map(|q| format!("hull element {q} ({}) is no ρ_a⁻¹ρ_b", h.charts.charts[q])),
    );
    if h.lc.holds {
        r.verdict(
            "image_union_of_r_classes",
            h.image_is_union_of_r_classes(),
            None,
        );
    }
    Ok(())
}

fn iorder(a: &IorderArgs, r: &mut Report) -> Result<()> {
    if a.builtin {
        let kind: SymbolicKind = a.q.parse()?;
        if kind != SymbolicKind::Bicyclic {
            return Err(Error::unsupported(format!(
                "iorder has no built-in for {kind}"
            )));
        }
        if a.suite.is_some() {
            return Err(Error::unsupported("suites need a finite ambient semigroup"));
        }
        let e = SubsetEmbedding::bicyclic_identity_r_class(a.window);
        let fail = e.i_order_failure();
        r.verdict(
            format!("left_i_order (window {})", a.window),
            fail.is_none(),
            fail.map(|q| format!("{q:?}")),
        );
        let mut table = Vec::new();
        for q in e.universe() {
            if let Some((x, y)) = e.quotient_witness(q) {
                table.push(format!("{q:?} -> {x:?}⁻¹ {y:?}"));
            }
        }
        r.section("witnesses", table);
        if r.all_hold() {
            r.verdict("straight", e.is_straight()?, None);
        }
        r.section(
            "classical left order",
            vec![format!("{}", e.is_classical_left_order())],
        );
        return Ok(());
    }
    let q = load_table(Path::new(&a.q))?;
    let members = parse_members(
        a.members
            .as_deref()
            .ok_or_else(|| Error::input("members of S are required"))?,
    )?;
    let e = embedding(&q, members)?;
    match a.suite {
        Some(Suite::RClasses) => {
            for c in r_class_union_suite(&e)? {
                r.verdict(format!("{}: {}", c.clause, c.detail), true, None);
            }
            return Ok(());
        }
        Some(Suite::EUnitary) => {
            let v = e_unitary_check(&e)?;
            r.section(
                "E-unitary conditions",
                vec![
                    format!("Q E-unitary: {}", v[0]),
                    format!("S proper and S/σ embeds in Q/σ: {}", v[1]),
                    format!("S proper and S/σ cancellative: {}", v[2]),
                ],
            );
            r.verdict("the three conditions agree", true, None);
            return Ok(());
        }
        None => {}
    }
    let fail = e.i_order_failure();
    r.verdict("left_i_order", fail.is_none(), fail.map(|x| q.name(x)));
    let mut table = Vec::new();
    for x in q.elements() {
        if let Some((u, v)) = e.quotient_witness(&x) {
            table.push(format!("{} -> {}⁻¹ {}", q.name(x), q.name(u), q.name(v)));
        }
    }
    r.section("witnesses", table);
    if fail.is_none() {
        let straight = e.is_straight()?;
        let bad = if straight {
            None
        } else {
            q.elements()
                .find(|x| e.straight_witness(x).is_none())
                .map(|x| format!("{} has no witness with a R b", q.name(x)))
        };
        r.verdict("straight", straight, bad);
        if let Some((id, x)) = e.right_identity_failure() {
            return Err(Error::consistency(format!(
                "right identity {id} of S is not an identity of Q at {x}"
            )));
        }
    }
    r.section(
        "classical left order",
        vec![format!("{}", e.is_classical_left_order())],
    );
    Ok(())
}

fn lift(q: &Path, s: &str, p: &Path, t: &str, phi: &Path, r: &mut Report) -> Result<()> {
    let e = embedding(&load_table(q)?, parse_members(s)?)?;
    let f = embedding(&load_table(p)?, parse_members(t)?)?;
    let map = parse_map(&read(phi)?)?;
    let aligned: Vec<Elem> = e
        .members()
        .iter()
        .map(|m| {
            map.get(m)
                .copied()
                .ok_or_else(|| Error::input(format!("no image for member {m}")))
        })
        .collect::<Result<_>>()?;
    match lift_morphism(&e, &f, &aligned)? {
        LiftOutcome::Lifted(l) => {
            r.section(
                "lift",
                l.map
                    .iter()
                    .enumerate()
                    .map(|(x, y)| format!("{x} -> {y}"))
                    .collect(),
            );
            if let Some(onto) = l.onto {
                r.section("onto", vec![onto.to_string()]);
            }
            r.verdict("lifts", true, None);
        }
        LiftOutcome::Refused(f) => {
            r.verdict(
                "lifts",
                false,
                Some(format!("{} at {:?}", f.condition, f.witness)),
            );
        }
    }
    Ok(())
}

fn assemble(path: &Path, r: &mut Report) -> Result<()> {
    let d = SemilatticeDiagram::load(path)?;
    let s = build_strong_semilattice(&d)?;
    r.section(
        "S",
        s.semigroup.to_text().lines().map(str::to_string).collect(),
    );
    r.section(
        "vertices",
        s.semigroup
            .elements()
            .map(|x| format!("{x}: vertex {} local {}", s.vertex_of[x], s.local_of[x]))
            .collect(),
    );
    let ample = d.components.iter().all(|c| left_ample(c).is_ok());
    if !ample {
        r.section("left ample components", vec!["false".into()]);
        return Ok(());
    }
    let rep = strong_semilattice_ample_check(&d)?;
    r.verdict("S is left ample", rep.left_ample, None);
    r.verdict("R* on S is componentwise", rep.rstar_componentwise, None);
    if let Some((s_lc, pres)) = rep.lc {
        r.section(
            "lc",
            vec![
                format!("S has (LC): {s_lc}"),
                format!("connectors (LC)-preserving: {pres}"),
            ],
        );
        if s_lc {
            let a = assemble_hulls(&d)?;
            r.section(
                "Q",
                a.q.semigroup
                    .to_text()
                    .lines()
                    .map(str::to_string)
                    .collect(),
            );
            r.section(
                "Q -> hull of S",
                a.iso
                    .iter()
                    .enumerate()
                    .map(|(x, y)| format!("{x} -> {y}"))
                    .collect(),
            );
            r.verdict("Q is isomorphic to the hull of S over S", true, None);
        }
    }
    Ok(())
}

fn split_members_line(text: &str) -> Option<String> {
    text.lines().find_map(|l| {
        l.trim()
            .strip_prefix('#')
            .and_then(|rest| rest.trim().strip_prefix("members:"))
            .map(str::to_string)
    })
}

fn equiv(object: &str, builtin: bool, window: u64, r: &mut Report) -> Result<()> {
    if builtin {
        let kind: SymbolicKind = object.parse()?;
        match kind {
            SymbolicKind::AdditiveNaturals => {
                nat_bicyclic_round_trip(window)?;
                r.verdict(
                    format!("hull of (ℕ,+) agrees with the bicyclic monoid (window {window})"),
                    true,
                    None,
                );
                r.verdict("G of (bicyclic, {(0,n)}) is (ℕ,+)", true, None);
            }
            SymbolicKind::Bicyclic => {
                bicyclic_mu_check(window)?;
                nat_bicyclic_round_trip(window)?;
                r.verdict(
                    format!("μ is an isomorphism onto partial shifts (window {window})"),
                    true,
                    None,
                );
            }
            SymbolicKind::FreeMonoidRank2 => {
                return Err(Error::unsupported(
                    "the free monoid lacks (LC) and is no LAC object",
                ))
            }
        }
        return Ok(());
    }
    let text = read(Path::new(object))?;
    let table = FiniteSemigroup::parse(&text)?;
    match split_members_line(&text) {
        Some(list) => {
            let q = recognize_inverse(&table)
                .map_err(|f| Error::input(format!("Q is not inverse: {f}")))?;
            let b = BisObject::new(q, parse_members(&list)?)?;
            r.verdict("BIS certificates", true, None);
            bis_round_trip(&b)?;
            r.verdict("GF(Q, S) ≅ (Q, S) via μ", true, None);
            let id: Vec<Elem> = table.elements().collect();
            r.verdict(
                "μ square commutes for the identity",
                bis_naturality(&b, &b, &id)?,
                None,
            );
        }
        None => {
            let s = LacObject::new(table.clone())?;
            r.verdict("LAC certificates", true, None);
            lac_round_trip(&s)?;
            r.verdict("FG(S) ≅ S via θ", true, None);
            let (b, _) = functor_f(&s)?;
            r.section(
                "F(S)",
                b.ambient()
                    .semigroup()
                    .to_text()
                    .lines()
                    .map(str::to_string)
                    .collect(),
            );
            let mut count = 0;
            for phi in two_one_morphisms(&table, &table)? {
                if is_lc_preserving(&table, &table, &phi)?.holds {
                    lac_naturality(&s, &s, &phi)?;
                    count += 1;
                }
            }
            r.verdict(
                format!("θ square commutes for {count} endomorphisms"),
                true,
                None,
            );
        }
    }
    Ok(())
}

fn enumerate(a: &EnumerateArgs, r: &mut Report) -> Result<()> {
    let filters = Filters {
        left_ample: a.ample,
        lc: a.lc,
        inverse: a.inverse,
    };
    let found = enumerate_semigroups(a.order, filters, a.dedup)?;
    r.section("count", vec![found.len().to_string()]);
    if a.print {
        let mut lines = Vec::new();
        for s in &found {
            lines.extend(s.to_text().lines().map(str::to_string));
            lines.push(String::new());
        }
        r.section("tables", lines);
    }
    Ok(())
}

fn builtin(kind: SymbolicKind, window: u64, r: &mut Report) -> Result<()> {
    let s = SymbolicSemigroup::new(kind, window);
    r.section(
        "elements",
        s.elements().iter().map(|x| x.to_string()).collect(),
    );
    for (claim, holds) in s.validate_window() {
        r.verdict(claim, holds, None);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn table_file(dir: &tempfile::TempDir, name: &str, s: &FiniteSemigroup) -> String {
        let path = dir.path().join(name);
        std::fs::File::create(&path)
            .unwrap()
            .write_all(s.to_text().as_bytes())
            .unwrap();
        path.to_string_lossy().into_owned()
    }

    #[test]
    fn check_two_chain() {
        let dir = tempfile::tempdir().unwrap();
        let f = table_file(&dir, "twochain.sgp", &crate::table::samples::two_chain());
        let out = run(["iquot", "check", &f, "--ample", "--lc"]);
        assert_eq!(out.code, 0, "{out:?}");
        assert!(out.stdout.contains("left_ample: true"));
        assert!(out.stdout.contains("lc: true"));
    }

    #[test]
    fn failing_verdict_exits_one_with_witness() {
        let dir = tempfile::tempdir().unwrap();
        let f = table_file(&dir, "lz.sgp", &crate::table::samples::left_zero(2));
        let out = run(["iquot", "check", &f, "--ample"]);
        assert_eq!(out.code, 1);
        assert!(out.stdout.contains("witness"));
    }

    #[test]
    fn bicyclic_iorder() {
        let out = run(["iquot", "iorder", "bicyclic", "--builtin", "--window", "20"]);
        assert_eq!(out.code, 0, "{out:?}");
        assert!(out.stdout.contains("(3, 5) -> (0, 3)⁻¹ (0, 5)"));
    }

    #[test]
    fn enumerate_two() {
        let out = run(["iquot", "--json", "enumerate", "-n", "2"]);
        assert_eq!(out.code, 0);
        let rep: Report = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(rep.sections[0].lines, vec!["8".to_string()]);
    }

    #[test]
    fn json_is_deterministic_and_round_trips() {
        let args = ["iquot", "--json", "builtin", "bicyclic", "--window", "4"];
        let (a, b) = (run(args), run(args));
        assert_eq!(a, b);
        let rep: Report = serde_json::from_str(&a.stdout).unwrap();
        let again = serde_json::to_string_pretty(&rep).unwrap() + "\n";
        assert_eq!(again, a.stdout);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["iquot", "frobnicate"]).code, 2);
        assert_eq!(run(["iquot", "check", "/no/such/file"]).code, 2);
        assert_eq!(run(["iquot", "enumerate", "-n", "9"]).code, 2);
    }

    #[test]
    fn help_exits_zero() {
        let out = run(["iquot", "--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("enumerate"));
    }
}
