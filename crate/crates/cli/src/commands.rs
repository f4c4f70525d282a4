//! Command dispatch and report rendering.

use thickgen::generation::witness::principal_power_witness;
use thickgen::homology::supph;
use thickgen::spectrum::{describe_spec, NilpotenceOutcome, SpecShape};
use thickgen::{
    ann_total_homology, homology, idempotents, koszul, level_lower_bound, nilpotence_lemma_check,
    strong_generation_obstruction, thick_member, validate_witness, ConnectivityBasis, FreeComplex, Ideal,
    LevelCertificate, ObstructionOutcome, Ring,
};

use crate::script::{command_elem, kind_error, resolve, Command, Session, Value};
use crate::{CliError, Options};

/// One `key: value` block.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Block(pub Vec<(String, String)>);

impl Block {
    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub blocks: Vec<Block>,
}

impl Report {
    pub fn machine(&self) -> String {
        let blocks: Vec<String> =
            self.blocks.iter().map(|b| b.0.iter().map(|(k, v)| format!("{k}: {v}\n")).collect::<String>()).collect();
        blocks.join("\n")
    }

    pub fn human(&self) -> String {
        let mut out = format!("== {} ==\n", self.title);
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let width = b.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &b.0 {
                out.push_str(&format!("  {k:<width$}  {v}\n"));
            }
        }
        out
    }
}

fn engine(cmd: &Command) -> impl Fn(thickgen::Error) -> CliError + '_ {
    move |e| CliError::Engine { line: cmd.line, source: e }
}

fn syntax(cmd: &Command, msg: impl Into<String>) -> CliError {
    CliError::Syntax { line: cmd.line, col: cmd.words.first().map_or(1, |w| w.0), msg: msg.into() }
}

fn complex_arg(s: &Session, cmd: &Command, idx: usize) -> Result<FreeComplex, CliError> {
    match resolve(s, cmd, idx)?.0 {
        Value::Complex(x) => Ok(x.clone()),
        v => Err(kind_error(cmd, idx, v, "a complex")),
    }
}

fn ring_arg(s: &Session, cmd: &Command, idx: usize) -> Result<Ring, CliError> {
    match resolve(s, cmd, idx)?.0 {
        Value::Ring(r) => Ok(r.clone()),
        v => Err(kind_error(cmd, idx, v, "a ring")),
    }
}

fn ideal_arg(s: &Session, cmd: &Command, idx: usize) -> Result<Ideal, CliError> {
    match resolve(s, cmd, idx)?.0 {
        Value::Ideal(i) => Ok(i.clone()),
        v => Err(kind_error(cmd, idx, v, "an ideal")),
    }
}

/// Value of `--flag VALUE` among the words after position `from`, rejecting anything else.
fn options<'c>(cmd: &'c Command, from: usize, allowed: &[&str]) -> Result<Vec<(&'c str, &'c str)>, CliError> {
    let mut out = Vec::new();
    let mut i = from;
    while i < cmd.words.len() {
        let (col, w) = &cmd.words[i];
        if !allowed.contains(&w.as_str()) {
            return Err(CliError::Syntax { line: cmd.line, col: *col, msg: format!("unexpected argument '{w}'") });
        }
        let (_, v) = cmd
            .words
            .get(i + 1)
            .ok_or_else(|| CliError::Syntax { line: cmd.line, col: *col, msg: format!("{w} needs a value") })?;
        out.push((w.as_str(), v.as_str()));
        i += 2;
    }
    Ok(out)
}

fn max_option(cmd: &Command, from: usize) -> Result<usize, CliError> {
    let opts = options(cmd, from, &["--max"])?;
    let (_, v) = opts.last().ok_or_else(|| syntax(cmd, format!("'{}' needs --max N", cmd.words[0].1)))?;
    v.parse().ok().filter(|&n| n > 0).ok_or_else(|| syntax(cmd, format!("--max expects a positive integer, got '{v}'")))
}

fn arity(cmd: &Command, n: usize, usage: &str) -> Result<(), CliError> {
    if cmd.words.len() < n + 1 {
        return Err(syntax(cmd, format!("usage: {usage}")));
    }
    Ok(())
}

fn exact_arity(cmd: &Command, n: usize, usage: &str) -> Result<(), CliError> {
    if cmd.words.len() != n + 1 {
        return Err(syntax(cmd, format!("usage: {usage}")));
    }
    Ok(())
}

pub fn certificate_block(c: &LevelCertificate) -> Block {
    let b = Block::default().with("kind", c.kind());
    match c {
        LevelCertificate::LowerBound { level, ann_g, ann_x, evidence } => b
            .with("level", level)
            .with("cones", level.saturating_sub(1))
            .with("evidence", evidence)
            .with("ann-g", ann_g)
            .with("ann-x", ann_x),
        LevelCertificate::UpperBound { level, witness } => {
            b.with("level", level).with("cones", level.saturating_sub(1)).with("witness", &witness.root)
        }
        LevelCertificate::NotInThick { support_x, support_g } => {
            b.with("support-x", support_x).with("support-g", support_g)
        }
    }
}

/// Runs one command against the session.
pub fn run_command(session: &Session, cmd: &Command, opts: &Options) -> Result<Report, CliError> {
    let e = engine(cmd);
    let title = cmd.text();
    let name = cmd.words.first().map(|w| w.1.as_str()).unwrap_or("");
    let blocks = match name {
        "koszul" => {
            exact_arity(cmd, 1, "koszul I")?;
            let k = koszul(&ideal_arg(session, cmd, 1)?).map_err(&e)?;
            vec![Block::default().with("complex", k.to_literal())]
        }
        "homology" => {
            exact_arity(cmd, 1, "homology X")?;
            let x = complex_arg(session, cmd, 1)?;
            let mut out = Vec::new();
            for n in x.degrees() {
                out.push(Block::default().with("degree", n).with("homology", homology(&x, n).map_err(&e)?));
            }
            out
        }
        "ann" => {
            exact_arity(cmd, 1, "ann X")?;
            let x = complex_arg(session, cmd, 1)?;
            vec![Block::default().with("ann", ann_total_homology(&x).map_err(&e)?)]
        }
        "support" => {
            exact_arity(cmd, 1, "support X")?;
            let x = complex_arg(session, cmd, 1)?;
            vec![Block::default().with("support", supph(&x).map_err(&e)?)]
        }
        "thick-member" => {
            exact_arity(cmd, 2, "thick-member X G")?;
            let (x, g) = (complex_arg(session, cmd, 1)?, complex_arg(session, cmd, 2)?);
            let m = thick_member(&x, &g).map_err(&e)?;
            vec![Block::default()
                .with("member", m.member)
                .with("support-x", &m.support_x)
                .with("support-g", &m.support_g)]
        }
        "level-lb" => {
            exact_arity(cmd, 2, "level-lb X G")?;
            let (x, g) = (complex_arg(session, cmd, 1)?, complex_arg(session, cmd, 2)?);
            vec![certificate_block(&level_lower_bound(&x, &g).map_err(&e)?)]
        }
        "witness-principal" => {
            arity(cmd, 2, "witness-principal x n [--ring R]")?;
            let ring = match options(cmd, 3, &["--ring"])?.last() {
                Some(_) => ring_arg(session, cmd, cmd.words.len() - 1)?,
                None => session.last_ring().cloned().ok_or_else(|| syntax(cmd, "no ring is defined"))?,
            };
            let x = command_elem(&ring, cmd, 1)?;
            let n: usize = cmd.words[2]
                .1
                .parse()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| syntax(cmd, format!("expected a positive power, got '{}'", cmd.words[2].1)))?;
            let w = principal_power_witness(&x, n).map_err(&e)?;
            let target = FreeComplex::two_term(&x.pow(n as u64));
            let level = validate_witness(&w, &target, &FreeComplex::two_term(&x)).map_err(&e)?;
            vec![certificate_block(&LevelCertificate::UpperBound { level, witness: w })]
        }
        "validate-witness" => {
            exact_arity(cmd, 3, "validate-witness W X G")?;
            let w = match resolve(session, cmd, 1)?.0 {
                Value::Witness(w) => w.clone(),
                v => return Err(kind_error(cmd, 1, v, "a witness")),
            };
            let (x, g) = (complex_arg(session, cmd, 2)?, complex_arg(session, cmd, 3)?);
            let level = validate_witness(&w, &x, &g).map_err(&e)?;
            vec![Block::default().with("valid", true).with("level", level).with("cones", level.saturating_sub(1))]
        }
        "spec" => {
            exact_arity(cmd, 1, "spec R")?;
            let d = describe_spec(&ring_arg(session, cmd, 1)?).map_err(&e)?;
            let mut b = Block::default().with("ring", &d.ring).with("shape", &d.shape);
            if let SpecShape::FinitePrimes { primes, certified } = &d.shape {
                let ps: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
                b = b.with("primes", ps.join(" ")).with("certified", certified);
            }
            vec![b]
        }
        "idempotents" => {
            exact_arity(cmd, 1, "idempotents R")?;
            let es = idempotents(&ring_arg(session, cmd, 1)?).map_err(&e)?;
            let items: Vec<String> = es.elements.iter().map(|x| x.to_string()).collect();
            let mut b = Block::default().with("idempotents", items.join(" "));
            if es.assumed_domain {
                b = b.with("basis", "assumed-domain");
            }
            vec![b]
        }
        "nilpotence" => {
            arity(cmd, 2, "nilpotence R I --max N")?;
            let (r, i) = (ring_arg(session, cmd, 1)?, ideal_arg(session, cmd, 2)?);
            let max = max_option(cmd, 3)?;
            let rep = nilpotence_lemma_check(&r, &i, max).map_err(&e)?;
            let b = Block::default().with("ideal", &rep.ideal);
            vec![match rep.outcome {
                NilpotenceOutcome::Nilpotent { n } => b.with("outcome", "nilpotent").with("stabilizes-at", n),
                NilpotenceOutcome::NegativeControl { n, idempotent, power_nonzero } => b
                    .with("outcome", "disconnected")
                    .with("stabilizes-at", n)
                    .with("idempotent", idempotent)
                    .with("power-nonzero", power_nonzero),
                NilpotenceOutcome::UnknownConnectivity { n, power_nonzero } => b
                    .with("outcome", "unknown-connectivity")
                    .with("stabilizes-at", n)
                    .with("power-nonzero", power_nonzero),
                NilpotenceOutcome::StrictlyDescending { max_n } => b.with("outcome", "strictly-descending").with("max", max_n),
            }]
        }
        "obstruct" => {
            arity(cmd, 2, "obstruct R I --max N")?;
            let (r, i) = (ring_arg(session, cmd, 1)?, ideal_arg(session, cmd, 2)?);
            let max = max_option(cmd, 3)?;
            let rep = strong_generation_obstruction(&r, &i, max, opts.jobs).map_err(&e)?;
            let connectivity = match rep.connectivity {
                ConnectivityBasis::Checked => "checked",
                ConnectivityBasis::AssumedDomain => "assumed-domain",
            };
            let annihilators = if rep.regular_sequence_assumed { "assumed-regular-sequence" } else { "computed" };
            let mut out = vec![Block::default()
                .with("ring", &rep.ring)
                .with("ideal", &rep.ideal)
                .with("connectivity", connectivity)
                .with("annihilators", annihilators)];
            match &rep.outcome {
                ObstructionOutcome::Degenerate { n, nilpotent } => {
                    out.push(Block::default().with("kind", "degenerate").with("n", n).with("nilpotent", nilpotent));
                }
                ObstructionOutcome::Certificates(cs) => {
                    for (n, c) in cs {
                        let mut b = certificate_block(c);
                        b.0.insert(1, ("n".to_string(), n.to_string()));
                        out.push(b);
                    }
                }
            }
            out.push(Block::default().with("verdict", rep.verdict()));
            out
        }
        "" => return Err(syntax(cmd, "empty command")),
        other => return Err(syntax(cmd, format!("unknown command '{other}'"))),
    };
    Ok(Report { title, blocks })
}
