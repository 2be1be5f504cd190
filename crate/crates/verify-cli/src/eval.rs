//! Scenario evaluation: execute the statements of a parsed scenario over a
//! concrete coefficient field and assemble a report.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use homalg::error::{EngineError, Result};
use homalg::field::{Field, Gf32003, Rat};
use homalg::fpmod::{FPModule, FreeModule};
use homalg::homology::{self, DepthValue, PdResult};
use homalg::ideal::Ideal;
use homalg::invariants;
use homalg::poly::Polynomial;
use homalg::ring::QuotientRing;

use crate::report::{FieldChoice, Report, ReportBuilder, RunConfig, Status};
use crate::scenario::{parse_scenario, Arg, Call, CmpOp, ModExpr, Scenario, Stmt, Value};
use crate::thm23;

/// Parse and run a scenario source. A `field` statement in the file
/// overrides the configured default.
pub fn run_scenario_source(name: &str, src: &str, cfg: &RunConfig) -> Result<Report> {
    let scenario = parse_scenario(src)?;
    let mut cfg = *cfg;
    if let Some(f) = scenario.field() {
        cfg.field = f;
    }
    run_scenario(name, &scenario, &cfg)
}

pub fn run_scenario(name: &str, scenario: &Scenario, cfg: &RunConfig) -> Result<Report> {
    match cfg.field {
        FieldChoice::Gf32003 => eval_scenario::<Gf32003>(name, scenario, cfg),
        FieldChoice::Qq => eval_scenario::<Rat>(name, scenario, cfg),
    }
}

pub(crate) struct Env<F: Field> {
    pub rings: BTreeMap<String, Arc<QuotientRing<F>>>,
    pub ideals: BTreeMap<String, Ideal<F>>,
    pub modules: BTreeMap<String, FPModule<F>>,
}

impl<F: Field> Env<F> {
    pub fn new() -> Self {
        Env { rings: BTreeMap::new(), ideals: BTreeMap::new(), modules: BTreeMap::new() }
    }

    fn define(&mut self, name: &str) -> Result<()> {
        if self.rings.contains_key(name)
            || self.ideals.contains_key(name)
            || self.modules.contains_key(name)
        {
            return Err(EngineError::Internal(format!(
                "name `{}` is defined twice",
                name
            )));
        }
        Ok(())
    }

    fn ring(&self, name: &str) -> Result<&Arc<QuotientRing<F>>> {
        self.rings
            .get(name)
            .ok_or_else(|| EngineError::Undefined(name.to_string()))
    }

    fn ideal(&self, name: &str) -> Result<&Ideal<F>> {
        self.ideals
            .get(name)
            .ok_or_else(|| EngineError::Undefined(name.to_string()))
    }

    /// A name in module position: a module, or a ring standing for itself.
    fn module(&self, name: &str) -> Result<FPModule<F>> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        if let Some(r) = self.rings.get(name) {
            return Ok(FPModule::ring_module(r));
        }
        Err(EngineError::Undefined(name.to_string()))
    }
}

/// Infer compatible twists for a cokernel matrix from the degrees of its
/// nonzero entries, anchoring the component of the first row at zero.
/// Ambiguity (a disconnected degree graph or an empty column) is an error.
fn infer_twists<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    rows: &[Vec<Polynomial<F>>],
) -> Result<(Vec<i64>, Vec<i64>)> {
    let nrows = rows.len();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    // nodes: 0..nrows are rows, nrows..nrows+ncols are columns
    let mut assigned: Vec<Option<i64>> = vec![None; nrows + ncols];
    let mut queue = std::collections::VecDeque::new();
    assigned[0] = Some(0);
    queue.push_back(0usize);
    while let Some(node) = queue.pop_front() {
        let base = assigned[node].unwrap();
        if node < nrows {
            for (j, e) in rows[node].iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let d = e.degree().unwrap() as i64;
                let want = base + d; // column twist = row twist + entry degree
                match assigned[nrows + j] {
                    None => {
                        assigned[nrows + j] = Some(want);
                        queue.push_back(nrows + j);
                    }
                    Some(have) if have == want => {}
                    Some(have) => {
                        return Err(EngineError::AmbiguousTwists(format!(
                            "column {} receives degrees {} and {}",
                            j, have, want
                        )))
                    }
                }
            }
        } else {
            let j = node - nrows;
            for (i, row) in rows.iter().enumerate() {
                let e = &row[j];
                if e.is_zero() {
                    continue;
                }
                let d = e.degree().unwrap() as i64;
                let want = base - d;
                match assigned[i] {
                    None => {
                        assigned[i] = Some(want);
                        queue.push_back(i);
                    }
                    Some(have) if have == want => {}
                    Some(have) => {
                        return Err(EngineError::AmbiguousTwists(format!(
                            "row {} receives degrees {} and {}",
                            i, have, want
                        )))
                    }
                }
            }
        }
    }
    let _ = ring;
    let mut target = Vec::with_capacity(nrows);
    for (i, a) in assigned[..nrows].iter().enumerate() {
        match a {
            Some(v) => target.push(*v),
            None => {
                return Err(EngineError::AmbiguousTwists(format!(
                    "row {} is not connected to row 0; give explicit twists",
                    i
                )))
            }
        }
    }
    let mut source = Vec::with_capacity(ncols);
    for (j, a) in assigned[nrows..].iter().enumerate() {
        match a {
            Some(v) => source.push(*v),
            None => {
                return Err(EngineError::AmbiguousTwists(format!(
                    "column {} has no nonzero entry; give explicit twists",
                    j
                )))
            }
        }
    }
    Ok((target, source))
}

fn build_module<F: Field>(env: &Env<F>, expr: &ModExpr) -> Result<FPModule<F>> {
    match expr {
        ModExpr::Cyclic(ideal_name) => FPModule::cyclic(env.ideal(ideal_name)?),
        ModExpr::Cokernel { ring, rows, twists } => {
            let ring = env.ring(ring)?;
            let parsed: Vec<Vec<Polynomial<F>>> = rows
                .iter()
                .map(|row| row.iter().map(|s| ring.parse(s)).collect::<Result<_>>())
                .collect::<Result<_>>()?;
            let ncols = parsed.first().map(|r| r.len()).unwrap_or(0);
            for row in &parsed {
                if row.len() != ncols {
                    return Err(EngineError::DegreeMismatch(
                        "ragged cokernel matrix".into(),
                    ));
                }
            }
            let (target, source) = match twists {
                Some(ts) => {
                    if ts.len() != parsed.len() {
                        return Err(EngineError::AmbiguousTwists(
                            "explicit twists must list one degree per row".into(),
                        ));
                    }
                    // derive column twists from any nonzero entry
                    let mut source = Vec::with_capacity(ncols);
                    for j in 0..ncols {
                        let mut found = None;
                        for (i, row) in parsed.iter().enumerate() {
                            if !row[j].is_zero() {
                                found = Some(ts[i] + row[j].degree().unwrap() as i64);
                                break;
                            }
                        }
                        source.push(found.ok_or_else(|| {
                            EngineError::AmbiguousTwists(format!(
                                "column {} has no nonzero entry",
                                j
                            ))
                        })?);
                    }
                    (ts.clone(), source)
                }
                None => infer_twists(ring, &parsed)?,
            };
            FPModule::new(
                ring,
                FreeModule::new(target),
                FreeModule::new(source),
                parsed,
            )
        }
        ModExpr::Transpose(name) => homology::transpose(&env.module(name)?),
        ModExpr::Tensor(a, b) => env.module(a)?.tensor(&env.module(b)?),
        ModExpr::Syzygy(name, n) => homology::syzygy_module(&env.module(name)?, *n),
        ModExpr::Restrict(name, ring) => env.module(name)?.restrict_to(env.ring(ring)?),
    }
}

/// The computed side of an assertion.
enum Computed<F: Field> {
    Int(i64),
    Bool(bool),
    Pd(PdResult),
    Depth(DepthValue),
    WitnessOpt(Option<u32>),
    Module(FPModule<F>),
}

impl<F: Field> Computed<F> {
    fn render(&self) -> String {
        match self {
            Computed::Int(n) => n.to_string(),
            Computed::Bool(b) => b.to_string(),
            Computed::Pd(p) => p.render(),
            Computed::Depth(d) => d.render(),
            Computed::WitnessOpt(None) => "none".into(),
            Computed::WitnessOpt(Some(n)) => format!("witness({})", n),
            Computed::Module(m) => {
                if m.is_zero() {
                    "0".into()
                } else {
                    format!("nonzero ({} generators)", m.min_gens())
                }
            }
        }
    }

    fn equals(&self, v: &Value) -> Result<bool> {
        let ok = match (self, v) {
            (Computed::Int(a), Value::Int(b)) => a == b,
            (Computed::Bool(a), Value::Bool(b)) => a == b,
            (Computed::Pd(PdResult::Finite(a)), Value::Finite(b)) => a == b,
            (Computed::Pd(PdResult::AtLeast(a)), Value::AtLeast(b)) => a == b,
            (Computed::Pd(_), Value::Finite(_) | Value::AtLeast(_)) => false,
            (Computed::Depth(DepthValue::Finite(a)), Value::Int(b)) => (*a as i64) == *b,
            (Computed::Depth(DepthValue::Infinite), Value::Infinity) => true,
            (Computed::Depth(_), Value::Int(_) | Value::Infinity) => false,
            (Computed::WitnessOpt(None), Value::NoneVal) => true,
            (Computed::WitnessOpt(Some(_)), Value::NoneVal) => false,
            (Computed::WitnessOpt(Some(a)), Value::Witness(b)) => a == b,
            (Computed::WitnessOpt(None), Value::Witness(_)) => false,
            (Computed::Module(m), Value::Int(0)) => m.is_zero(),
            _ => {
                return Err(EngineError::Internal(format!(
                    "assertion compares incompatible kinds (computed {}, expected {})",
                    self.render(),
                    v.render()
                )))
            }
        };
        Ok(ok)
    }
}

struct Outcome<F: Field> {
    computed: Computed<F>,
    /// Extra certificate text appended to the rendered value.
    detail: Option<String>,
    advisory: bool,
}

impl<F: Field> Outcome<F> {
    fn plain(c: Computed<F>) -> Self {
        Outcome { computed: c, detail: None, advisory: false }
    }
}

fn arg_name(call: &Call, i: usize) -> Result<&str> {
    match call.args.get(i) {
        Some(Arg::Name(n)) => Ok(n),
        _ => Err(EngineError::Internal(format!(
            "`{}` expects a name in position {}",
            call.func,
            i + 1
        ))),
    }
}

fn arg_int(call: &Call, i: usize) -> Result<i64> {
    match call.args.get(i) {
        Some(Arg::Int(n)) => Ok(*n),
        _ => Err(EngineError::Internal(format!(
            "`{}` expects an integer in position {}",
            call.func,
            i + 1
        ))),
    }
}

fn arg_module<F: Field>(env: &Env<F>, cfg: &RunConfig, call: &Call, i: usize) -> Result<FPModule<F>> {
    match call.args.get(i) {
        Some(Arg::Name(n)) => env.module(n),
        Some(Arg::Call(c)) => eval_module_call(env, cfg, c),
        _ => Err(EngineError::Internal(format!(
            "`{}` expects a module in position {}",
            call.func,
            i + 1
        ))),
    }
}

fn require_args(call: &Call, n: usize) -> Result<()> {
    if call.args.len() == n {
        Ok(())
    } else {
        Err(EngineError::Internal(format!(
            "`{}` expects {} arguments, got {}",
            call.func,
            n,
            call.args.len()
        )))
    }
}

/// Module-valued expressions usable inside assertions.
fn eval_module_call<F: Field>(env: &Env<F>, cfg: &RunConfig, call: &Call) -> Result<FPModule<F>> {
    match call.func.as_str() {
        "tor" => {
            require_args(call, 3)?;
            let m = arg_module(env, cfg, call, 0)?;
            let n = arg_module(env, cfg, call, 1)?;
            homology::tor(&m, &n, arg_int(call, 2)? as usize, cfg.max_res)
        }
        "ext" => {
            require_args(call, 3)?;
            let m = arg_module(env, cfg, call, 0)?;
            let n = arg_module(env, cfg, call, 1)?;
            homology::ext(&m, &n, arg_int(call, 2)? as usize, cfg.max_res)
        }
        "tensor" => {
            require_args(call, 2)?;
            arg_module(env, cfg, call, 0)?.tensor(&arg_module(env, cfg, call, 1)?)
        }
        "hom" => {
            require_args(call, 2)?;
            arg_module(env, cfg, call, 0)?.hom(&arg_module(env, cfg, call, 1)?)
        }
        "dual" => {
            require_args(call, 1)?;
            arg_module(env, cfg, call, 0)?.dual()
        }
        "transpose" => {
            require_args(call, 1)?;
            homology::transpose(&arg_module(env, cfg, call, 0)?)
        }
        "syzygy" => {
            require_args(call, 2)?;
            homology::syzygy_module(&arg_module(env, cfg, call, 0)?, arg_int(call, 1)? as usize)
        }
        other => Err(EngineError::Internal(format!(
            "`{}` is not a module-valued expression",
            other
        ))),
    }
}

fn eval_expr<F: Field>(env: &Env<F>, cfg: &RunConfig, call: &Call) -> Result<Outcome<F>> {
    match call.func.as_str() {
        "dim" => {
            require_args(call, 1)?;
            let name = arg_name(call, 0)?;
            if let Ok(ring) = env.ring(name) {
                return Ok(Outcome::plain(Computed::Int(ring.dim() as i64)));
            }
            let m = env.module(name)?;
            Ok(Outcome::plain(Computed::Int(
                invariants::dim_module(&m)? as i64
            )))
        }
        "height" => {
            require_args(call, 1)?;
            let p = env.ideal(arg_name(call, 0)?)?;
            Ok(Outcome::plain(Computed::Int(invariants::height(p)? as i64)))
        }
        "depth" => {
            require_args(call, 1)?;
            let m = arg_module(env, cfg, call, 0)?;
            Ok(Outcome::plain(Computed::Depth(homology::depth(&m)?)))
        }
        "grade" => {
            let p = env.ideal(arg_name(call, 0)?)?;
            let m = if call.args.len() > 1 {
                arg_module(env, cfg, call, 1)?
            } else {
                FPModule::ring_module(p.ring())
            };
            Ok(Outcome::plain(Computed::Depth(homology::grade(p, &m)?)))
        }
        "pd" => {
            require_args(call, 1)?;
            let m = arg_module(env, cfg, call, 0)?;
            Ok(Outcome::plain(Computed::Pd(homology::pd(&m, cfg.max_res)?)))
        }
        "rank" => {
            require_args(call, 1)?;
            let m = arg_module(env, cfg, call, 0)?;
            Ok(Outcome::plain(Computed::Int(invariants::rank(
                &m,
                cfg.max_res,
            )?)))
        }
        "hs_rank" => {
            require_args(call, 1)?;
            let m = arg_module(env, cfg, call, 0)?;
            Ok(Outcome::plain(Computed::Int(invariants::hs_rank(&m)?)))
        }
        "mu" => {
            require_args(call, 1)?;
            let name = arg_name(call, 0)?;
            if let Ok(ideal) = env.ideal(name) {
                return Ok(Outcome::plain(Computed::Int(ideal.num_min_gens()? as i64)));
            }
            let m = env.module(name)?;
            Ok(Outcome::plain(Computed::Int(m.min_gens() as i64)))
        }
        "hf" => {
            require_args(call, 2)?;
            let m = arg_module(env, cfg, call, 0)?;
            let d = arg_int(call, 1)?;
            let bound = cfg.max_degree.unwrap_or_else(|| m.default_degree_bound());
            let hf = m.hilbert_function(bound.max(d))?;
            Ok(Outcome::plain(Computed::Int(hf.value(d) as i64)))
        }
        "betti" => {
            require_args(call, 2)?;
            let m = arg_module(env, cfg, call, 0)?;
            let i = arg_int(call, 1)? as usize;
            let res = homology::resolve(&m, i)?;
            Ok(Outcome::plain(Computed::Int(res.rank(i) as i64)))
        }
        "serre" => {
            require_args(call, 2)?;
            let m = arg_module(env, cfg, call, 0)?;
            let n = arg_int(call, 1)? as u32;
            let rep = invariants::serre(&m, n)?;
            let cert: Vec<String> = rep
                .certificate
                .iter()
                .map(|(i, z)| format!("Ext^{}(Tr,R){}", i, if *z { "=0" } else { "!=0" }))
                .collect();
            Ok(Outcome {
                computed: Computed::Bool(rep.holds),
                detail: Some(format!("[{}]", cert.join(", "))),
                advisory: false,
            })
        }
        "torsionless" => {
            require_args(call, 1)?;
            let m = arg_module(env, cfg, call, 0)?;
            Ok(Outcome::plain(Computed::Bool(invariants::is_torsionless(
                &m,
            )?)))
        }
        "reflexive" => {
            require_args(call, 1)?;
            let m = arg_module(env, cfg, call, 0)?;
            Ok(Outcome::plain(Computed::Bool(invariants::is_reflexive(&m)?)))
        }
        "torsion" => {
            require_args(call, 1)?;
            let m = arg_module(env, cfg, call, 0)?;
            Ok(Outcome::plain(Computed::Bool(invariants::is_torsion(&m)?)))
        }
        "locally_free_at" => {
            require_args(call, 2)?;
            let m = arg_module(env, cfg, call, 0)?;
            let p = env.ideal(arg_name(call, 1)?)?;
            Ok(Outcome::plain(Computed::Bool(
                invariants::is_locally_free_at(&m, p)?,
            )))
        }
        "support_contains" => {
            require_args(call, 2)?;
            let m = arg_module(env, cfg, call, 0)?;
            let p = env.ideal(arg_name(call, 1)?)?;
            Ok(Outcome::plain(Computed::Bool(invariants::support_contains(
                &m, p,
            )?)))
        }
        "depth_formula" => {
            require_args(call, 2)?;
            let m = arg_module(env, cfg, call, 0)?;
            let n = arg_module(env, cfg, call, 1)?;
            let rep = invariants::check_depth_formula(&m, &n, cfg.max_res)?;
            let holds = rep.certified && rep.holds == Some(true);
            Ok(Outcome {
                computed: Computed::Bool(holds),
                detail: Some(rep.summary()),
                advisory: !rep.certified,
            })
        }
        "tor_independent" => {
            require_args(call, 2)?;
            let m = arg_module(env, cfg, call, 0)?;
            let n = arg_module(env, cfg, call, 1)?;
            match invariants::tor_independent(&m, &n, cfg.max_res)? {
                Some(b) => Ok(Outcome::plain(Computed::Bool(b))),
                None => Ok(Outcome {
                    computed: Computed::Bool(false),
                    detail: Some(format!(
                        "vanishing certified only up to the bound {}; not conclusive",
                        cfg.max_res
                    )),
                    advisory: true,
                }),
            }
        }
        "rigidity_witness" => {
            require_args(call, 2)?;
            let m = arg_module(env, cfg, call, 0)?;
            let n = arg_module(env, cfg, call, 1)?;
            match invariants::rigidity_witness(&m, &n, cfg.max_res) {
                Ok(w) => Ok(Outcome::plain(Computed::WitnessOpt(w.map(|w| w.n)))),
                Err(EngineError::BoundExceeded { bound, .. }) => Ok(Outcome {
                    computed: Computed::WitnessOpt(None),
                    detail: Some(format!("resolution bound {} exceeded", bound)),
                    advisory: true,
                }),
                Err(e) => Err(e),
            }
        }
        "is_zero" => {
            require_args(call, 1)?;
            let m = arg_module(env, cfg, call, 0)?;
            Ok(Outcome::plain(Computed::Bool(m.is_zero())))
        }
        "thm23" => {
            require_args(call, 4)?;
            let p = env.ideal(arg_name(call, 0)?)?;
            let x = arg_module(env, cfg, call, 1)?;
            let m = arg_module(env, cfg, call, 2)?;
            let n = arg_int(call, 3)? as u32;
            let pipeline = thm23::run_pipeline(p, &x, &m, n, cfg)?;
            Ok(Outcome {
                computed: Computed::Bool(pipeline.all_hold()),
                detail: Some(pipeline.summary()),
                advisory: false,
            })
        }
        // module-valued at the top level: compared against 0
        "tor" | "ext" | "tensor" | "hom" | "dual" | "transpose" | "syzygy" => {
            Ok(Outcome::plain(Computed::Module(eval_module_call(
                env, cfg, call,
            )?)))
        }
        other => Err(EngineError::Internal(format!(
            "unknown assertion function `{}` at line {}",
            other, call.line
        ))),
    }
}

fn eval_scenario<F: Field>(name: &str, scenario: &Scenario, cfg: &RunConfig) -> Result<Report> {
    let mut env: Env<F> = Env::new();
    let mut rb = ReportBuilder::new(name, cfg);
    for stmt in &scenario.stmts {
        match stmt {
            Stmt::Field(_) => {}
            Stmt::Ring { name, vars, order, ideal, flags } => {
                env.define(name)?;
                let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
                let gen_refs: Vec<&str> = ideal.iter().map(|s| s.as_str()).collect();
                let equidim = flags.iter().any(|f| f == "equidimensional");
                let ring = QuotientRing::new(&var_refs, *order, &gen_refs, equidim)?;
                env.rings.insert(name.clone(), ring);
            }
            Stmt::Ideal { name, gens, ring } => {
                env.define(name)?;
                let ring = env.ring(ring)?.clone();
                let gen_refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
                let ideal = Ideal::parse(&ring, &gen_refs)?;
                env.ideals.insert(name.clone(), ideal);
            }
            Stmt::Module { name, expr } => {
                env.define(name)?;
                let m = build_module(&env, expr)?;
                env.modules.insert(name.clone(), m);
            }
            Stmt::Note(text) => {
                rb.note("scope", text);
            }
            Stmt::Assert { expr, op, value, provenance } => {
                let started = Instant::now();
                let outcome = eval_expr(&env, cfg, expr)?;
                let eq = outcome.computed.equals(value)?;
                let pass = match op {
                    CmpOp::Eq => eq,
                    CmpOp::Ne => !eq,
                };
                let name_text = format!("{} {} {}", expr.render(), op.render(), value.render());
                let mut computed = outcome.computed.render();
                if let Some(d) = outcome.detail {
                    computed = format!("{} {}", computed, d);
                }
                let status = if outcome.advisory {
                    Status::Advisory
                } else if pass {
                    Status::Pass
                } else {
                    Status::Fail
                };
                rb.push(
                    &name_text,
                    provenance.name(),
                    &value.render(),
                    &computed,
                    status,
                    started,
                );
            }
        }
    }
    Ok(rb.finish())
}
