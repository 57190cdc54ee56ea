//! Front-end logic for the `qdyson` binary: request parsing helpers, the
//! constant-term and sweep runners, and the JSON report types.

use std::time::Instant;

use qdyson_core::closed_forms::main_rhs;
use qdyson_core::dyson::{brute_ct, rotate_reduce, DysonParams, GeneralMonomial};
use qdyson_core::gx::{gx_ct_monomial, GxOptions};
use qdyson_core::qseries::{QPoly, QRat};
use qdyson_core::verify::{run_suite, Suite, SuiteReport, SweepConfig};
use qdyson_core::Error;
use serde::{Deserialize, Serialize};
use serde_json::Number;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INVARIANT: u8 = 3;

pub fn exit_code(err: &Error) -> u8 {
    if err.is_usage() {
        EXIT_USAGE
    } else {
        EXIT_INVARIANT
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Closed,
    Gx,
}

/// Parses `j:p` pairs such as `1:2,3:1`.
pub fn parse_num_entry(s: &str) -> Result<(usize, u32), String> {
    let (j, p) = s.split_once(':').ok_or_else(|| format!("expected j:p, got {s:?}"))?;
    let j = j.trim().parse().map_err(|e| format!("bad index in {s:?}: {e}"))?;
    let p = p.trim().parse().map_err(|e| format!("bad power in {s:?}: {e}"))?;
    if p == 0 {
        return Err(format!("power in {s:?} must be positive"));
    }
    Ok((j, p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtRequest {
    pub n: usize,
    pub a: Vec<i64>,
    pub num: Vec<(usize, u32)>,
    pub den: Vec<usize>,
    pub method: Method,
    pub trace: bool,
}

impl CtRequest {
    /// The exponent vector of `x^num / x^den`.
    pub fn exponents(&self) -> Result<Vec<i32>, Error> {
        if self.a.len() != self.n + 1 {
            return Err(usage(format!("--a has {} entries, expected n + 1 = {}", self.a.len(), self.n + 1)));
        }
        let mut b = vec![0i32; self.n + 1];
        for (pos, &i) in self.den.iter().enumerate() {
            if i > self.n {
                return Err(usage(format!("denominator index {i} exceeds n = {}", self.n)));
            }
            if self.den[..pos].contains(&i) {
                return Err(usage(format!("denominator index {i} repeated")));
            }
            b[i] -= 1;
        }
        for (pos, &(j, p)) in self.num.iter().enumerate() {
            if j > self.n {
                return Err(usage(format!("numerator index {j} exceeds n = {}", self.n)));
            }
            if self.den.contains(&j) || self.num[..pos].iter().any(|&(k, _)| k == j) {
                return Err(usage(format!("numerator index {j} repeated or also in the denominator")));
            }
            b[j] += p as i32;
        }
        if b.iter().sum::<i32>() != 0 {
            return Err(usage("numerator and denominator degrees differ"));
        }
        Ok(b)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub n: usize,
    pub a: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecJson {
    pub num: Vec<(usize, u32)>,
    pub den: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub q_low: i64,
    pub coeffs: Vec<Number>,
}

impl From<&QPoly> for PolyJson {
    fn from(p: &QPoly) -> Self {
        let coeffs = p.coeffs().iter().map(|c| c.to_string().parse().expect("integers are valid JSON numbers")).collect();
        PolyJson { q_low: if p.is_zero() { 0 } else { p.low() }, coeffs }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResultKind {
    Poly,
    Rat,
}

/// A constant term: `q_low` and `coeffs` for Laurent polynomials, `num` and
/// `den` otherwise, plus the canonical text rendering.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultJson {
    pub kind: ResultKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_low: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<Vec<Number>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub num: Option<PolyJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den: Option<PolyJson>,
    pub text: String,
}

impl From<&QRat> for ResultJson {
    fn from(r: &QRat) -> Self {
        let text = r.to_string();
        match r.as_poly() {
            Some(p) => {
                let p = PolyJson::from(p);
                ResultJson {
                    kind: ResultKind::Poly,
                    q_low: Some(p.q_low),
                    coeffs: Some(p.coeffs),
                    num: None,
                    den: None,
                    text,
                }
            }
            None => ResultJson {
                kind: ResultKind::Rat,
                q_low: None,
                coeffs: None,
                num: Some(r.num().into()),
                den: Some(r.den().into()),
                text,
            },
        }
    }
}

/// How the monomial was moved to canonical position:
/// `CT(M D(a)) = q^{q_shift} CT(M' D(a'))`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RotationJson {
    pub steps: usize,
    pub q_shift: i64,
    pub a: Vec<i64>,
    pub spec: SpecJson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub params: ParamsJson,
    pub spec: SpecJson,
    pub method: Method,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<ResultJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<RotationJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
    pub elapsed_ms: u64,
}

struct CtOutcome {
    value: QRat,
    rotation: Option<RotationJson>,
    trace: Vec<String>,
}

fn compute_ct(req: &CtRequest) -> Result<CtOutcome, Error> {
    let b = req.exponents()?;
    let params = DysonParams::new(req.a.clone())?;
    let rot = rotate_reduce(&GeneralMonomial::new(b)?, &params)?;
    if rot.steps > 0 && params.a0() < 0 {
        return Err(usage("a negative a_0 cannot be rotated away from x_0; use a monomial with x_0 in the denominator"));
    }
    let (spec, p) = (&rot.spec, &rot.params);
    let mut trace = Vec::new();
    let value = match req.method {
        Method::Brute => {
            if p.a0() < 0 {
                return Err(usage("brute force needs a_0 >= 0"));
            }
            QRat::from_poly(brute_ct(p, spec)?)
        }
        Method::Closed => main_rhs(p, spec)?,
        Method::Gx => {
            if p.a0() > 0 {
                return Err(usage(format!("gx reads a_0 <= 0 as h = -a_0; got a_0 = {}", p.a0())));
            }
            let run = gx_ct_monomial(&spec.exponents(p.n()), p, -p.a0(), GxOptions::default())?;
            if req.trace {
                trace = run.branches.iter().map(ToString::to_string).collect();
            }
            run.value
        }
    };
    let rotation = (rot.steps > 0).then(|| RotationJson {
        steps: rot.steps,
        q_shift: rot.q_shift,
        a: p.all().to_vec(),
        spec: SpecJson {
            num: spec.j_list().iter().copied().zip(spec.p().iter().copied()).collect(),
            den: spec.i_set().to_vec(),
        },
    });
    Ok(CtOutcome { value: value.shift(rot.q_shift), rotation, trace })
}

/// Runs one constant-term request and returns the report with its exit code.
pub fn run_ct(req: &CtRequest) -> (RunResult, u8) {
    let start = Instant::now();
    let outcome = compute_ct(req);
    let mut out = RunResult {
        params: ParamsJson { n: req.n, a: req.a.clone() },
        spec: SpecJson { num: req.num.clone(), den: req.den.clone() },
        method: req.method,
        status: Status::Ok,
        result: None,
        error: None,
        rotation: None,
        trace: Vec::new(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    match outcome {
        Ok(o) => {
            out.result = Some((&o.value).into());
            out.rotation = o.rotation;
            out.trace = o.trace;
            (out, EXIT_OK)
        }
        Err(e) => {
            out.status = Status::Error;
            out.error = Some(e.to_string());
            (out, exit_code(&e))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigJson {
    pub max_n: usize,
    pub max_a: i64,
    pub max_m: usize,
    pub samples: usize,
    pub seed: u64,
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteJson {
    pub suite: String,
    pub passed: bool,
    pub checked: usize,
    pub failed: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    pub elapsed_ms: u64,
}

impl SuiteJson {
    fn new(r: &SuiteReport, elapsed_ms: u64) -> Self {
        SuiteJson {
            suite: r.suite.name().to_string(),
            passed: r.passed(),
            checked: r.checked,
            failed: r.failed,
            first_failure: r.first_failure.clone(),
            elapsed_ms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: ConfigJson,
    pub status: String,
    pub suites: Vec<SuiteJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Runs the listed suites on a pool of `jobs` threads (0 = rayon default).
/// Reports come back in the order requested.
pub fn run_verify(suites: &[Suite], cfg: &SweepConfig, jobs: usize) -> (VerifyReport, u8) {
    let start = Instant::now();
    let mut report = VerifyReport {
        config: ConfigJson {
            max_n: cfg.max_n,
            max_a: cfg.max_a,
            max_m: cfg.max_m,
            samples: cfg.samples,
            seed: cfg.seed,
            jobs,
        },
        status: "pass".into(),
        suites: Vec::new(),
        error: None,
        elapsed_ms: 0,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            report.status = "error".into();
            report.error = Some(format!("thread pool: {e}"));
            return (report, EXIT_USAGE);
        }
    };
    let mut code = EXIT_OK;
    for &suite in suites {
        let t = Instant::now();
        match pool.install(|| run_suite(suite, cfg)) {
            Ok(r) => {
                if !r.passed() {
                    report.status = "fail".into();
                    code = EXIT_FAILED;
                }
                report.suites.push(SuiteJson::new(&r, t.elapsed().as_millis() as u64));
            }
            Err(e) => {
                report.status = "error".into();
                report.error = Some(format!("{suite}: {e}"));
                code = exit_code(&e);
                break;
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    (report, code)
}

/// Pretty JSON with a trailing newline, as printed by the binary.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
