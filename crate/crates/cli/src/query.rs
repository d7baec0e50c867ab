use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use multiseg::criteria::{
    self, cusp_socle, irreducible_explained, is_ladder, is_saturated, is_speh, lc_pair_multi,
    lc_pair_witness, lc_seg, lc_seg_witness, left_divide_by_segment, rc_seg, rho_extraction,
    socle_ladder_times_traced, socle_seg_times, CuspInstance, LcInstance, PairVariant,
};
use multiseg::grammar::parse_segment;
use multiseg::matching::Matching;
use multiseg::sweep::{Bounds, Suite};
use multiseg::unitary::{speh_multisegment, tadic_product, BElement, SpehParam};
use multiseg::{parse, Line, Multisegment, Param, Rational, RigidMultisegment, Segment};

/// One request, shared by the subcommands and batch mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Query {
    Involution {
        m: String,
    },
    Socle {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seg: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ladder: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rho: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        power: Option<usize>,
        with: String,
    },
    Cosocle {
        ladder: String,
        with: String,
    },
    Irreducible {
        #[serde(alias = "seg")]
        m: String,
        #[serde(alias = "with")]
        n: String,
    },
    Lc {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seg: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        m: Option<String>,
        with: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        variant: Option<String>,
    },
    Rc {
        seg: String,
        with: String,
    },
    Divide {
        m: String,
        seg: String,
    },
    Extract {
        m: String,
        rho: String,
    },
    Classify {
        m: String,
    },
    SpehBuild {
        n: usize,
        d: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        center: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        twist: Option<String>,
    },
    TadicProduct {
        elements: Vec<String>,
    },
    Sweep {
        suite: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_coord: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_segs: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        random: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
}

impl Query {
    pub fn op(&self) -> &'static str {
        match self {
            Query::Involution { .. } => "involution",
            Query::Socle { .. } => "socle",
            Query::Cosocle { .. } => "cosocle",
            Query::Irreducible { .. } => "irreducible",
            Query::Lc { .. } => "lc",
            Query::Rc { .. } => "rc",
            Query::Divide { .. } => "divide",
            Query::Extract { .. } => "extract",
            Query::Classify { .. } => "classify",
            Query::SpehBuild { .. } => "speh-build",
            Query::TadicProduct { .. } => "tadic-product",
            Query::Sweep { .. } => "sweep",
        }
    }

    fn input(&self) -> Value {
        let mut v = serde_json::to_value(self).unwrap_or(Value::Null);
        if let Some(obj) = v.as_object_mut() {
            obj.remove("op");
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_CAP: i32 = 4;

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    fn about(name: &str, text: &str, e: multiseg::Error) -> Self {
        let code = exit_code(&e);
        Self::new(code, format!("{name} `{text}`: {e}"))
    }

    pub fn to_json(&self, op: Option<&str>) -> Value {
        let mut v = json!({"v": 1, "error": {"code": self.code, "message": self.message}});
        if let Some(op) = op {
            v["op"] = json!(op);
        }
        v
    }
}

pub fn exit_code(e: &multiseg::Error) -> i32 {
    match e {
        multiseg::Error::Parse { .. }
        | multiseg::Error::ReversedSegment { .. }
        | multiseg::Error::InvalidOffset(_)
        | multiseg::Error::EmptyInput => EXIT_PARSE,
        multiseg::Error::Unsupported(_) => EXIT_UNSUPPORTED,
        multiseg::Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_FAILURE,
    }
}

impl From<multiseg::Error> for CliError {
    fn from(e: multiseg::Error) -> Self {
        Self::new(exit_code(&e), e.to_string())
    }
}

/// The answer to a query, renderable as text or JSON.
#[derive(Debug, Clone, PartialEq)]
pub struct Response {
    pub op: &'static str,
    pub input: Value,
    pub result: Value,
    pub text: String,
    pub witness: Option<(Value, Vec<String>)>,
    /// Exit status: nonzero when a sweep finds mismatches or skips over a cap.
    pub status: i32,
}

impl Response {
    pub fn to_json(&self, explain: bool) -> Value {
        let mut v = json!({"v": 1, "op": self.op, "input": self.input, "result": self.result});
        if explain {
            if let Some((w, _)) = &self.witness {
                v["witness"] = w.clone();
            }
        }
        v
    }

    pub fn to_text(&self, explain: bool) -> String {
        let mut out = self.text.clone();
        if explain {
            if let Some((_, lines)) = &self.witness {
                for l in lines {
                    out.push('\n');
                    out.push_str(l);
                }
            }
        }
        out
    }
}

fn multi(name: &str, text: &str) -> Result<Multisegment, CliError> {
    parse(text).map_err(|e| CliError::about(name, text, e))
}

fn segment(name: &str, text: &str) -> Result<(Line, Segment), CliError> {
    parse_segment(text).map_err(|e| CliError::about(name, text, e))
}

/// A cuspidal point: an integer on the default line, or a one-point segment.
fn point(name: &str, text: &str) -> Result<(Line, i64), CliError> {
    if let Ok(x) = text.trim().parse::<i64>() {
        return Ok((Line::default(), x));
    }
    let (line, s) = segment(name, text)?;
    if !s.is_point() {
        return Err(CliError::new(
            EXIT_PARSE,
            format!("{name} `{text}`: expected a single point"),
        ));
    }
    Ok((line, s.begin()))
}

fn rational(name: &str, text: &str) -> Result<Rational, CliError> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| CliError::new(EXIT_PARSE, format!("{name} `{text}`: expected a fraction p/q")))
}

fn variant(text: Option<&str>) -> Result<PairVariant, CliError> {
    match text.unwrap_or("base") {
        "base" => Ok(PairVariant::Base),
        "prime" => Ok(PairVariant::Prime),
        "double-prime" => Ok(PairVariant::DoublePrime),
        other => Err(CliError::new(
            EXIT_PARSE,
            format!("variant `{other}`: expected base, prime or double-prime"),
        )),
    }
}

/// `N,D[@CENTER][~ALPHA]`; the centre defaults to the symmetric anchor.
fn b_element(text: &str) -> Result<BElement, CliError> {
    let bad = |why: &str| CliError::new(EXIT_PARSE, format!("element `{text}`: {why}"));
    let (head, alpha) = match text.split_once('~') {
        Some((h, a)) => (h, Some(rational("alpha", a)?)),
        None => (text, None),
    };
    let (dims, center) = match head.split_once('@') {
        Some((dims, c)) => (dims, Some(c.trim().parse::<i64>().map_err(|_| bad("bad centre"))?)),
        None => (head, None),
    };
    let (n, d) = dims.split_once(',').ok_or_else(|| bad("expected N,D"))?;
    let n = n.trim().parse::<usize>().map_err(|_| bad("bad N"))?;
    let d = d.trim().parse::<usize>().map_err(|_| bad("bad D"))?;
    let p = match center {
        Some(c) => SpehParam::new(n, d, Line::default(), c)?,
        None => SpehParam::centered(n, d, "", Rational::from_integer(0))?,
    };
    Ok(match alpha {
        Some(a) => BElement::Complementary(p, a),
        None => BElement::Rigid(p),
    })
}

fn bool_response(op: &'static str, q: &Query, b: bool) -> Response {
    Response {
        op,
        input: q.input(),
        result: json!(b),
        text: b.to_string(),
        witness: None,
        status: 0,
    }
}

fn multi_response(op: &'static str, q: &Query, m: &Multisegment) -> Response {
    Response {
        op,
        input: q.input(),
        result: json!(m.to_string()),
        text: m.to_string(),
        witness: None,
        status: 0,
    }
}

fn join(segs: impl IntoIterator<Item = Segment>) -> String {
    let v: Vec<String> = segs.into_iter().map(|s| s.to_string()).collect();
    if v.is_empty() {
        "none".into()
    } else {
        v.join(" ")
    }
}

fn lc_witness(inst: &LcInstance, f: &Matching, note: Option<&str>) -> (Value, Vec<String>) {
    let seg = |i: usize| inst.segments[i];
    let xs: Vec<Segment> = inst.x.iter().map(|&i| seg(i)).collect();
    let ys: Vec<Segment> = inst.y.iter().map(|&i| seg(i)).collect();
    let pairs = inst.matched_segments(f);
    let unmatched: Vec<Segment> = f.domain_complement.iter().map(|&x| xs[x]).collect();
    let str_list = |v: &[Segment]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let mut w = json!({
        "x": str_list(&xs),
        "y": str_list(&ys),
        "map": pairs.iter().map(|(a, b)| json!([a.to_string(), b.to_string()])).collect::<Vec<_>>(),
        "unmatched": str_list(&unmatched),
    });
    let mut lines = Vec::new();
    if let Some(note) = note {
        w["note"] = json!(note);
        lines.push(note.to_string());
    }
    lines.push(format!("X: {}", join(xs.iter().copied())));
    lines.push(format!("Y: {}", join(ys.iter().copied())));
    for (a, b) in &pairs {
        lines.push(format!("f: {a} <- {b}"));
    }
    lines.push(format!("unmatched: {}", join(unmatched)));
    (w, lines)
}

pub fn execute(q: &Query) -> Result<Response, CliError> {
    let op = q.op();
    match q {
        Query::Involution { m } => {
            let m = multi("m", m)?;
            Ok(multi_response(op, q, &multiseg::mw_involution(&m)))
        }

        Query::Socle {
            seg,
            ladder,
            rho,
            power,
            with,
        } => {
            let n = multi("with", with)?;
            match (seg, ladder, rho) {
                (Some(s), None, None) => {
                    let (line, d) = segment("seg", s)?;
                    let l = socle_seg_times(&line, d, &Param::zelevinsky(n.clone()));
                    let z = l.to_zelevinsky().m;
                    let mut r = multi_response(op, q, &z);
                    let lm = l.m.to_string();
                    r.witness = Some((json!({"langlands": lm}), vec![format!("Langlands: {lm}")]));
                    Ok(r)
                }
                (None, Some(lad), None) => {
                    let m = multi("ladder", lad)?;
                    let out = criteria::socle_ladder(&m, &n)?;
                    let mut r = multi_response(op, q, &out);
                    r.witness = Some(ladder_trace(&m, &n)?);
                    Ok(r)
                }
                (None, None, Some(p)) => {
                    let (line, rho) = point("rho", p)?;
                    let a = power.unwrap_or(1);
                    let out = cusp_socle(&line, rho, a, &n);
                    let inst = CuspInstance::new(rho, &n.part_or_empty(&line));
                    let free: Vec<Segment> = inst
                        .matching
                        .domain_complement
                        .iter()
                        .map(|&i| inst.segments[inst.x[i]])
                        .collect();
                    let mut r = multi_response(op, q, &out);
                    r.witness = Some((
                        json!({"extended": free.iter().take(a).map(|s| s.to_string()).collect::<Vec<_>>()}),
                        vec![format!("unmatched in X: {}", join(free))],
                    ));
                    Ok(r)
                }
                _ => Err(CliError::new(
                    EXIT_PARSE,
                    "socle: give exactly one of --seg, --ladder or --rho",
                )),
            }
        }

        Query::Cosocle { ladder, with } => {
            let m = multi("ladder", ladder)?;
            let n = multi("with", with)?;
            Ok(multi_response(op, q, &criteria::cosocle_ladder(&m, &n)?))
        }

        Query::Irreducible { m, n } => {
            let (m, n) = (multi("m", m)?, multi("n", n)?);
            let (verdict, methods) = irreducible_explained(&m, &n)?;
            let mut r = bool_response(op, q, verdict);
            let lines = methods
                .iter()
                .map(|(line, method)| format!("{line}: {}", method.name()))
                .collect();
            let w = methods
                .iter()
                .map(|(line, method)| json!({"line": line.to_string(), "method": method.name()}))
                .collect::<Vec<_>>();
            r.witness = Some((json!(w), lines));
            Ok(r)
        }

        Query::Lc {
            seg,
            m,
            with,
            variant: v,
        } => {
            let n = multi("with", with)?;
            match (seg, m) {
                (Some(s), None) => {
                    let (line, d) = segment("seg", s)?;
                    let part = n.part_or_empty(&line);
                    let (inst, f) = lc_seg_witness(d, &part);
                    let mut r = bool_response(op, q, lc_seg(d, &part));
                    r.witness = Some(lc_witness(&inst, &f, None));
                    Ok(r)
                }
                (None, Some(m)) => {
                    let m = multi("m", m)?;
                    let variant = variant(v.as_deref())?;
                    let mut r = bool_response(op, q, lc_pair_multi(&m, &n, variant));
                    r.witness = Some(pair_witness(&m, &n, variant));
                    Ok(r)
                }
                _ => Err(CliError::new(EXIT_PARSE, "lc: give exactly one of --seg or --m")),
            }
        }

        Query::Rc { seg, with } => {
            let (line, d) = segment("seg", seg)?;
            let part = multi("with", with)?.part_or_empty(&line);
            let (inst, f) = lc_seg_witness(d.dual(), &part.dual());
            let mut r = bool_response(op, q, rc_seg(d, &part));
            r.witness = Some(lc_witness(&inst, &f, Some("computed as LC of the contragredients")));
            Ok(r)
        }

        Query::Divide { m, seg } => {
            let pi = Param::zelevinsky(multi("m", m)?);
            let (line, d) = segment("seg", seg)?;
            let out = left_divide_by_segment(&pi, &line, d).map(|p| p.to_zelevinsky().m);
            Ok(Response {
                op,
                input: q.input(),
                result: out.as_ref().map_or(Value::Null, |m| json!(m.to_string())),
                text: out.map_or("none".into(), |m| m.to_string()),
                witness: None,
                status: 0,
            })
        }

        Query::Extract { m, rho } => {
            let m = multi("m", m)?;
            let (line, rho) = point("rho", rho)?;
            let (a, rest) = rho_extraction(&line, &m, rho);
            let inst = CuspInstance::new(rho, &m.part_or_empty(&line));
            let c: Vec<Segment> = inst
                .matching
                .range_complement
                .iter()
                .map(|&j| inst.segments[inst.y[j]])
                .collect();
            Ok(Response {
                op,
                input: q.input(),
                result: json!({"power": a, "rest": rest.to_string()}),
                text: format!("power: {a}\nrest: {rest}"),
                witness: Some((
                    json!({"trimmed": c.iter().map(|s| s.to_string()).collect::<Vec<_>>()}),
                    vec![format!("trimmed: {}", join(c))],
                )),
                status: 0,
            })
        }

        Query::Classify { m } => {
            let m = multi("m", m)?;
            let parts: Vec<&RigidMultisegment> = m.parts().map(|(_, r)| r).collect();
            let ladder = parts.iter().all(|r| is_ladder(r));
            let speh = parts.len() == 1 && is_speh(parts[0]);
            let saturated = is_saturated(&m);
            let unlinked = m.is_totally_unlinked();
            Ok(Response {
                op,
                input: q.input(),
                result: json!({
                    "ladder": ladder,
                    "speh": speh,
                    "saturated": saturated,
                    "totally_unlinked": unlinked,
                }),
                text: format!(
                    "ladder: {ladder}\nspeh: {speh}\nsaturated: {saturated}\ntotally-unlinked: {unlinked}"
                ),
                witness: None,
                status: 0,
            })
        }

        Query::SpehBuild {
            n,
            d,
            center,
            label,
            twist,
        } => {
            let label = label.as_deref().unwrap_or("");
            let p = match center {
                Some(c) => {
                    let line = match twist {
                        Some(t) => Line::new(label, rational("twist", t)?)?,
                        None => Line::labelled(label),
                    };
                    SpehParam::new(*n, *d, line, *c)?
                }
                None => {
                    let t = match twist {
                        Some(t) => rational("twist", t)?,
                        None => Rational::from_integer(0),
                    };
                    SpehParam::centered(*n, *d, label, t)?
                }
            };
            Ok(multi_response(op, q, &speh_multisegment(&p)))
        }

        Query::TadicProduct { elements } => {
            let els = elements.iter().map(|e| b_element(e)).collect::<Result<Vec<_>, _>>()?;
            let (param, irreducible) = tadic_product(&els)?;
            let lines = els
                .iter()
                .map(|e| -> Result<String, CliError> {
                    let p = multiseg::unitary::b_element_param(e)?;
                    Ok(format!("{p}"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Response {
                op,
                input: q.input(),
                result: json!({"langlands": param.m.to_string(), "irreducible": irreducible}),
                text: format!("{param}\nirreducible: {irreducible}"),
                witness: Some((json!({"factors": lines}), lines.iter().map(|l| format!("factor: {l}")).collect())),
                status: 0,
            })
        }

        Query::Sweep {
            suite,
            max_coord,
            max_segs,
            random,
            seed,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![Suite::from_name(suite).ok_or_else(|| {
                    let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                    CliError::new(
                        EXIT_PARSE,
                        format!("suite `{suite}`: expected all or one of {}", names.join(", ")),
                    )
                })?]
            };
            let mut text = Vec::new();
            let mut results = Vec::new();
            let mut status = 0;
            for s in suites {
                let d = s.default_bounds();
                let bounds = Bounds {
                    max_coord: max_coord.unwrap_or(d.max_coord),
                    max_segs: max_segs.unwrap_or(d.max_segs),
                    random: random.unwrap_or(d.random),
                    seed: seed.unwrap_or(d.seed),
                    caps: d.caps,
                };
                let report = s.run(&bounds)?;
                if !report.ok() {
                    status = EXIT_FAILURE;
                } else if report.skipped > 0 && status == 0 {
                    status = EXIT_CAP;
                }
                text.push(if suite == "all" {
                    format!("{s}: {report}")
                } else {
                    report.to_string()
                });
                results.push(json!({
                    "suite": s.name(),
                    "ok": report.ok(),
                    "instances": report.instances,
                    "mismatches": report.mismatches,
                    "skipped": report.skipped,
                    "examples": report.examples,
                }));
            }
            let result = if results.len() == 1 {
                results.pop().unwrap_or(Value::Null)
            } else {
                json!(results)
            };
            Ok(Response {
                op,
                input: q.input(),
                result,
                text: text.join("\n"),
                witness: None,
                status,
            })
        }
    }
}

fn ladder_trace(m: &Multisegment, n: &Multisegment) -> Result<(Value, Vec<String>), CliError> {
    let lines: std::collections::BTreeSet<&Line> = m.lines().chain(n.lines()).collect();
    let mut w = Vec::new();
    let mut text = Vec::new();
    for line in lines {
        let (_, steps) = socle_ladder_times_traced(&m.part_or_empty(line), &n.part_or_empty(line))?;
        for (depth, s) in steps.iter().enumerate() {
            w.push(json!({
                "line": line.to_string(),
                "depth": depth,
                "delta": s.delta.to_string(),
                "high": s.high.to_string(),
                "top": s.top.to_string(),
                "low": s.low.to_string(),
                "result": s.result.to_string(),
            }));
            text.push(format!(
                "{line} depth {depth}: delta {} high {} top {} low {} -> {}",
                s.delta, s.high, s.top, s.low, s.result
            ));
        }
    }
    Ok((json!(w), text))
}

fn pair_witness(m: &Multisegment, n: &Multisegment, variant: PairVariant) -> (Value, Vec<String>) {
    let lines: std::collections::BTreeSet<&Line> = m.lines().chain(n.lines()).collect();
    let mut w = Vec::new();
    let mut text = Vec::new();
    for line in lines {
        let (inst, f) = lc_pair_witness(&m.part_or_empty(line), &n.part_or_empty(line), variant);
        let name = |(i, j): (usize, usize)| format!("{}x{}", inst.m[i], inst.n[j]);
        let map: Vec<(String, String)> = f
            .pairs()
            .map(|(x, y)| (name(inst.x[x]), name(inst.y[y])))
            .collect();
        let unmatched: Vec<String> = f.domain_complement.iter().map(|&x| name(inst.x[x])).collect();
        for (a, b) in &map {
            text.push(format!("{line}: f: {a} <- {b}"));
        }
        if !unmatched.is_empty() {
            text.push(format!("{line}: unmatched: {}", unmatched.join(" ")));
        }
        w.push(json!({
            "line": line.to_string(),
            "map": map.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "unmatched": unmatched,
        }));
    }
    (json!(w), text)
}
