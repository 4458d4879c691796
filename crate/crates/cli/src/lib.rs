//! Command-line front end for the `zahlen` library.
//!
//! Every command produces a fixed-width text rendering and a JSON value
//! carrying the same data; `--json` selects the latter. The JSON layout is
//! described in `JSON.md` next to this crate's manifest.

pub mod parse;
pub mod table;

use std::ffi::OsString;
use std::fmt::Display;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use zahlen::arithfun::ArithFn;
use zahlen::contfrac::{cf_of_rational, cf_of_surd, cf_step, convergents, QuadraticSurd, Real};
use zahlen::intcore::{bezout, ext_gcd};
use zahlen::perm::{parse_cycles, Permutation};
use zahlen::qform::{self, Form, FormClass, Mat2};
use zahlen::{farey, modular, quadres, Error, Rational, Result};

use parse::{parse_rational, parse_surd};
use table::Table;

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Text and JSON renderings of one result.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub text: String,
    pub json: Value,
}

#[derive(Parser, Debug)]
#[command(name = "zahlen", version, about = "Exact elementary number theory")]
struct Cli {
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euclidean algorithm with its division chain.
    Gcd(Pair),
    /// Extended Euclidean algorithm table.
    Extgcd(Pair),
    /// Continued fraction of a rational or quadratic surd.
    Cf {
        /// `p/q`, `sqrt(N)`, `(sqrt(N)+p)/q` or `a,b,D`.
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Number of table rows (default: preperiod plus one period).
        #[arg(long)]
        rows: Option<usize>,
    },
    #[command(subcommand)]
    Farey(FareyCmd),
    #[command(subcommand)]
    Arith(ArithCmd),
    #[command(subcommand)]
    Mod(ModCmd),
    #[command(subcommand)]
    Qr(QrCmd),
    #[command(subcommand)]
    Qform(QformCmd),
    #[command(subcommand)]
    Perm(PermCmd),
}

#[derive(Args, Debug)]
struct Pair {
    #[arg(allow_negative_numbers = true)]
    a: BigInt,
    #[arg(allow_negative_numbers = true)]
    b: BigInt,
}

#[derive(Args, Debug)]
struct Triple {
    #[arg(allow_negative_numbers = true)]
    a: BigInt,
    #[arg(allow_negative_numbers = true)]
    b: BigInt,
    #[arg(allow_negative_numbers = true)]
    c: BigInt,
}

#[derive(Subcommand, Debug)]
enum FareyCmd {
    /// Members of the Farey sequence of order N between two neighbors.
    Section {
        #[arg(allow_hyphen_values = true)]
        lo: String,
        #[arg(allow_hyphen_values = true)]
        hi: String,
        n: BigInt,
    },
    /// The Farey neighbors of order N enclosing a surd.
    Approx {
        #[arg(allow_hyphen_values = true)]
        x: String,
        n: BigInt,
    },
}

#[derive(Subcommand, Debug)]
enum ArithCmd {
    /// Values of arithmetic functions for n = 1..N.
    Table {
        /// Comma-separated list from eps, one, id, mu, phi, tau.
        #[arg(long = "fn", value_delimiter = ',', default_value = "mu,phi,tau")]
        functions: Vec<String>,
        #[arg(long)]
        upto: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ModCmd {
    /// Multiplicative order of a modulo n.
    Order(Pair),
    /// Smallest primitive root modulo n.
    Primroot { n: BigInt },
    /// Solve x = a_k (mod n_k), each given as `a:n`.
    Crt {
        #[arg(required = true, allow_hyphen_values = true)]
        congruences: Vec<String>,
    },
    /// Inverse of a modulo n.
    Inv(Pair),
}

#[derive(Subcommand, Debug)]
enum QrCmd {
    /// Legendre symbol (a/p).
    Legendre(Pair),
    /// Jacobi symbol (P/Q).
    Jacobi(Pair),
    /// Square roots of a modulo m.
    Sqrtmod {
        #[arg(allow_negative_numbers = true)]
        a: BigInt,
        m: BigInt,
        #[arg(long)]
        all_solutions: bool,
    },
    /// Number of square roots of a modulo m.
    Count {
        #[arg(allow_negative_numbers = true)]
        a: BigInt,
        m: BigInt,
    },
}

#[derive(Subcommand, Debug)]
enum QformCmd {
    /// Reduction table of an indefinite form.
    Reduce(Triple),
    /// Smallest positive solution of t^2 - D u^2 = 4.
    Pell {
        d: BigInt,
        /// Solve x^2 - D y^2 = 1 instead.
        #[arg(long)]
        unit: bool,
    },
    /// Automorphisms of a form.
    Auto(Triple),
    /// Proper equivalence of two indefinite forms.
    Equiv {
        #[arg(allow_negative_numbers = true, num_args = 6, required = true)]
        coefs: Vec<BigInt>,
    },
}

#[derive(Subcommand, Debug)]
enum PermCmd {
    /// Sign of a permutation.
    Sign(PermArg),
    /// Canonical cycle notation and transposition decomposition.
    Cycles(PermArg),
    /// The composition f o g (g applied first).
    Compose {
        f: String,
        g: String,
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct PermArg {
    cycles: String,
    #[arg(long)]
    degree: Option<usize>,
}

/// Runs one command line, `args[0]` being the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(r) => Outcome {
            code: 0,
            stdout: if cli.json {
                let mut s = serde_json::to_string_pretty(&r.json).expect("JSON values serialize");
                s.push('\n');
                s
            } else {
                r.text
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        _ => 1,
    }
}

fn dispatch(cmd: Command) -> Result<Rendered> {
    match cmd {
        Command::Gcd(p) => gcd(&p.a, &p.b),
        Command::Extgcd(p) => extgcd(&p.a, &p.b),
        Command::Cf { x, rows } => cf(&x, rows),
        Command::Farey(FareyCmd::Section { lo, hi, n }) => farey_section(&lo, &hi, &n),
        Command::Farey(FareyCmd::Approx { x, n }) => farey_approx(&x, &n),
        Command::Arith(ArithCmd::Table { functions, upto }) => arith_table(&functions, upto),
        Command::Mod(m) => modcmd(m),
        Command::Qr(q) => qr(q),
        Command::Qform(q) => qformcmd(q),
        Command::Perm(p) => permcmd(p),
    }
}

fn s(x: &impl Display) -> Value {
    Value::String(x.to_string())
}

fn frac(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn simple(text: String, json: Value) -> Result<Rendered> {
    Ok(Rendered {
        text: text + "\n",
        json,
    })
}

fn normalization_note(swapped: bool, negated: bool, a: &BigInt, b: &BigInt) -> String {
    if swapped || negated {
        format!("normalized input: a = {a}, b = {b}\n")
    } else {
        String::new()
    }
}

fn gcd(a: &BigInt, b: &BigInt) -> Result<Rendered> {
    let tr = ext_gcd(a, b)?;
    let mut text = normalization_note(tr.swapped, tr.negated, &tr.a, &tr.b);
    let mut chain = Vec::new();
    for j in 1..tr.n_star {
        let (prev, cur, next) = (&tr.rows[j - 1].r, &tr.rows[j].r, &tr.rows[j + 1].r);
        let q = tr.rows[j].q.as_ref().expect("q_j exists below n*");
        chain.push((
            prev.to_string(),
            q.to_string(),
            cur.to_string(),
            next.to_string(),
        ));
    }
    let w = chain.iter().map(|c| c.0.len()).max().unwrap_or(0);
    for (prev, q, cur, next) in &chain {
        text += &format!("{prev:>w$} = {q} * {cur} + {next}\n");
    }
    if !chain.is_empty() {
        text.push('\n');
    }
    let mut t = Table::new(["j", "q_j", "r_j"]);
    for row in &tr.rows {
        t.row([row.j.to_string(), opt(&row.q), row.r.to_string()]);
    }
    text += &t.render();
    text += &format!("\nggT({a},{b}) = {}\n", tr.gcd());
    let json = json!({
        "a": s(a),
        "b": s(b),
        "swapped": tr.swapped,
        "negated": tr.negated,
        "n_star": tr.n_star,
        "chain": chain.iter().map(|(p, q, c, n)| json!({
            "dividend": p, "quotient": q, "divisor": c, "remainder": n
        })).collect::<Vec<_>>(),
        "rows": tr.rows.iter().map(|r| json!({
            "j": r.j, "q": r.q.as_ref().map(s), "r": s(&r.r)
        })).collect::<Vec<_>>(),
        "gcd": s(tr.gcd()),
    });
    Ok(Rendered { text, json })
}

fn opt(q: &Option<BigInt>) -> String {
    q.as_ref()
        .map_or_else(|| "---".to_string(), BigInt::to_string)
}

fn factor(c: &BigInt, x: &BigInt) -> String {
    if x.is_negative() {
        format!("{c}*({x})")
    } else {
        format!("{c}*{x}")
    }
}

fn extgcd(a: &BigInt, b: &BigInt) -> Result<Rendered> {
    let tr = ext_gcd(a, b)?;
    let (g, lam, mu) = bezout(a, b)?;
    let mut text = normalization_note(tr.swapped, tr.negated, &tr.a, &tr.b);
    let mut t = Table::new(["j", "q_j", "r_j", "s_j", "t_j", "b*s_j-a*t_j"]);
    for row in &tr.rows {
        t.row([
            row.j.to_string(),
            opt(&row.q),
            row.r.to_string(),
            row.s.to_string(),
            row.t.to_string(),
            tr.check(row.j).to_string(),
        ]);
    }
    text += &t.render();
    let (rs, rt) = tr.reduced();
    let second = if mu.is_negative() {
        format!("- {}", factor(&-&mu, b))
    } else {
        format!("+ {}", factor(&mu, b))
    };
    text += &format!(
        "\nn* = {}\na/b = {rs}/{rt}\nggT = {g} = {} {second}\n",
        tr.n_star,
        factor(&lam, a)
    );
    let json = json!({
        "a": s(a),
        "b": s(b),
        "swapped": tr.swapped,
        "negated": tr.negated,
        "n_star": tr.n_star,
        "rows": tr.rows.iter().map(|r| json!({
            "j": r.j,
            "q": r.q.as_ref().map(s),
            "r": s(&r.r),
            "s": s(&r.s),
            "t": s(&r.t),
            "check": s(&tr.check(r.j)),
        })).collect::<Vec<_>>(),
        "reduced": [s(&rs), s(&rt)],
        "gcd": s(&g),
        "lambda": s(&lam),
        "mu": s(&mu),
    });
    Ok(Rendered { text, json })
}

/// `(sqrt(D) - b)/(2a)` written with a positive denominator.
pub fn render_surd(x: &QuadraticSurd) -> String {
    let den = BigInt::from(2) * x.a();
    let shift = -x.b();
    let sign = if den.is_negative() { "-" } else { "" };
    let den = den.abs();
    let (shift, op) = if shift.is_negative() {
        (-shift, '-')
    } else {
        (shift, '+')
    };
    format!("{sign}(sqrt({}){op}{shift})/{den}", x.d())
}

fn cf(x: &str, rows: Option<usize>) -> Result<Rendered> {
    let parsed = parse_surd(x)?;
    match &parsed.value {
        Real::Rational(r) => cf_rational(r),
        Real::Surd(surd) => cf_surd(surd, &parsed.factor, rows),
    }
}

fn angle(terms: &[BigInt]) -> String {
    let items: Vec<String> = terms.iter().map(BigInt::to_string).collect();
    match items.split_first() {
        Some((head, [])) => format!("<{head}>"),
        Some((head, tail)) => format!("<{head}; {}>", tail.join(",")),
        None => "<>".into(),
    }
}

fn cf_rational(x: &Rational) -> Result<Rendered> {
    let cf = cf_of_rational(x, true);
    let terms = cf.terms();
    let conv = convergents(&cf);
    let mut t = Table::new(["j", "q_j", "s_j", "t_j"]);
    let mut rows = Vec::new();
    for (j, (sj, tj)) in conv.rows.iter().enumerate() {
        let q = terms.get(j).cloned();
        t.row([j.to_string(), opt(&q), sj.to_string(), tj.to_string()]);
        rows.push(json!({"j": j, "q": q.as_ref().map(s), "s": s(sj), "t": s(tj)}));
    }
    let text = format!("x = {}\n{}\n{}\n", frac(x), t.render(), angle(&terms));
    let json = json!({
        "kind": "rational",
        "x": frac(x),
        "terms": terms.iter().map(s).collect::<Vec<_>>(),
        "rows": rows,
    });
    Ok(Rendered { text, json })
}

fn cf_surd(x: &QuadraticSurd, k: &BigInt, rows: Option<usize>) -> Result<Rendered> {
    let pcf = cf_of_surd(x)?;
    let n = rows.unwrap_or(pcf.preperiod.len() + pcf.period.len());
    let mut t = Table::new(["j", "a_j", "b_j", "c_j", "x_j", "q_j", "s_j", "t_j"]);
    let mut state = x.clone();
    let (mut s0, mut t0) = (BigInt::one(), BigInt::zero());
    let (mut s1, mut t1) = (BigInt::zero(), BigInt::one());
    let mut out = Vec::new();
    for j in 0..n {
        let (q, next) = cf_step(&state);
        t.row([
            j.to_string(),
            state.a().to_string(),
            state.b().to_string(),
            state.c().to_string(),
            render_surd(&state),
            q.to_string(),
            s0.to_string(),
            t0.to_string(),
        ]);
        out.push(json!({
            "j": j,
            "a": s(state.a()),
            "b": s(state.b()),
            "c": s(&state.c()),
            "q": s(&q),
            "s": s(&s0),
            "t": s(&t0),
        }));
        // (s_{j+1}, t_{j+1}) from the recursion, with s_{-1}/t_{-1} = 0/1
        let (s2, t2) = (&s1 + &q * &s0, &t1 + &q * &t0);
        (s1, t1) = (s0, t0);
        (s0, t0) = (s2, t2);
        state = next;
    }
    let text = format!(
        "x = {}\nextension factor: {k}\n{}\n{pcf}\n",
        render_surd(x),
        t.render()
    );
    let json = json!({
        "kind": "surd",
        "a": s(x.a()),
        "b": s(x.b()),
        "d": s(x.d()),
        "extension_factor": s(k),
        "preperiod": pcf.preperiod.iter().map(s).collect::<Vec<_>>(),
        "period": pcf.period.iter().map(s).collect::<Vec<_>>(),
        "rows": out,
    });
    Ok(Rendered { text, json })
}

fn farey_section(lo: &str, hi: &str, n: &BigInt) -> Result<Rendered> {
    let lo = parse_rational(lo)?;
    let hi = parse_rational(hi)?;
    let items: Vec<String> = farey::section(&lo, &hi, n)?.iter().map(frac).collect();
    simple(items.join(" "), json!({"order": s(n), "fractions": items}))
}

fn farey_approx(x: &str, n: &BigInt) -> Result<Rendered> {
    let parsed = parse_surd(x)?;
    let pair = farey::farey_approx(&parsed.value, n)?;
    let (l, r) = (frac(&pair.left), frac(&pair.right));
    simple(
        format!("{l} {r}"),
        json!({"order": s(n), "left": l, "right": r}),
    )
}

fn arith_fn(name: &str, n: usize) -> Result<ArithFn> {
    Ok(match name {
        "eps" => ArithFn::epsilon(n),
        "one" => ArithFn::one(n),
        "id" => ArithFn::ident(n),
        "mu" => ArithFn::mu(n),
        "phi" => ArithFn::phi(n),
        "tau" => ArithFn::tau(n),
        other => {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("unknown function '{other}'"),
            })
        }
    })
}

fn arith_table(names: &[String], upto: usize) -> Result<Rendered> {
    if upto == 0 {
        return Err(Error::Domain("--upto must be at least 1".into()));
    }
    let mut headers = vec!["n".to_string()];
    headers.extend((1..=upto).map(|n| n.to_string()));
    let mut t = Table::new(headers);
    let mut funcs = Vec::new();
    for name in names {
        let f = arith_fn(name, upto)?;
        let vals: Vec<String> = f.values().iter().map(frac).collect();
        let mut row = vec![format!("{name}(n)")];
        row.extend(vals.iter().cloned());
        t.row(row);
        funcs.push(json!({"name": name, "values": vals}));
    }
    Ok(Rendered {
        text: t.render(),
        json: json!({"upto": upto, "functions": funcs}),
    })
}

fn parse_congruence(text: &str) -> Result<(BigInt, BigInt)> {
    let (a, n) = text.split_once(':').ok_or_else(|| Error::Parse {
        pos: 0,
        msg: format!("expected a:n, got '{text}'"),
    })?;
    let int = |t: &str, pos: usize| {
        t.trim().parse::<BigInt>().map_err(|_| Error::Parse {
            pos,
            msg: format!("malformed integer '{t}'"),
        })
    };
    Ok((int(a, 0)?, int(n, a.len() + 1)?))
}

fn modcmd(cmd: ModCmd) -> Result<Rendered> {
    match cmd {
        ModCmd::Order(Pair { a, b: n }) => {
            let k = modular::order(&a, &n)?;
            simple(
                k.to_string(),
                json!({"a": s(&a), "n": s(&n), "order": s(&k)}),
            )
        }
        ModCmd::Primroot { n } => {
            let g = modular::primitive_root(&n)?;
            let text = g.as_ref().map_or_else(|| "none".into(), BigInt::to_string);
            simple(text, json!({"n": s(&n), "root": g.as_ref().map(s)}))
        }
        ModCmd::Crt { congruences } => {
            let system = congruences
                .iter()
                .map(|c| parse_congruence(c))
                .collect::<Result<Vec<_>>>()?;
            let r = modular::crt(&system)?;
            simple(
                r.to_string(),
                json!({"value": s(&r.value), "modulus": s(&r.modulus)}),
            )
        }
        ModCmd::Inv(Pair { a, b: n }) => {
            let r = modular::mod_inverse(&a, &n)?;
            simple(
                r.value.to_string(),
                json!({"a": s(&a), "n": s(&n), "inverse": s(&r.value)}),
            )
        }
    }
}

fn qr(cmd: QrCmd) -> Result<Rendered> {
    match cmd {
        QrCmd::Legendre(Pair { a, b: p }) => {
            let v = quadres::legendre(&a, &p)?;
            simple(v.to_string(), json!({"a": s(&a), "p": s(&p), "symbol": v}))
        }
        QrCmd::Jacobi(Pair { a: p, b: q }) => {
            let v = quadres::jacobi(&p, &q)?;
            simple(v.to_string(), json!({"p": s(&p), "q": s(&q), "symbol": v}))
        }
        QrCmd::Sqrtmod {
            a,
            m,
            all_solutions,
        } => {
            let mut roots = quadres::sqrt_mod(&a, &m)?;
            if !all_solutions {
                roots.truncate(1);
            }
            let items: Vec<String> = roots.iter().map(BigInt::to_string).collect();
            let text = if items.is_empty() {
                "none".to_string()
            } else {
                items.join(" ")
            };
            simple(text, json!({"a": s(&a), "m": s(&m), "roots": items}))
        }
        QrCmd::Count { a, m } => {
            let k = quadres::count_sqrt_solutions(&a, &m)?;
            simple(
                k.to_string(),
                json!({"a": s(&a), "m": s(&m), "count": s(&k)}),
            )
        }
    }
}

fn form_cell(f: &Form) -> String {
    format!("{}, {}, {}", f.a, f.b, f.c)
}

fn matrix_lines(m: &Mat2) -> Vec<String> {
    let cells = [
        [m.alpha.to_string(), m.beta.to_string()],
        [m.gamma.to_string(), m.delta.to_string()],
    ];
    let w0 = cells[0][0].len().max(cells[1][0].len());
    let w1 = cells[0][1].len().max(cells[1][1].len());
    cells
        .iter()
        .map(|[x, y]| format!("{x:>w0$} {y:>w1$}"))
        .collect()
}

fn matrix_json(m: &Mat2) -> Value {
    json!([[s(&m.alpha), s(&m.beta)], [s(&m.gamma), s(&m.delta)]])
}

fn form_json(f: &Form) -> Value {
    json!([s(&f.a), s(&f.b), s(&f.c)])
}

fn qformcmd(cmd: QformCmd) -> Result<Rendered> {
    match cmd {
        QformCmd::Reduce(Triple { a, b, c }) => qform_reduce(&Form::new(a, b, c)),
        QformCmd::Pell { d, unit } => {
            let (t, u) = if unit {
                qform::pell_unit(&d)?
            } else {
                qform::pell(&d)?
            };
            let rhs = if unit { 1 } else { 4 };
            let (x, y) = if unit { ("x", "y") } else { ("t", "u") };
            simple(
                format!("{x} = {t}, {y} = {u}  ({x}^2 - {d}*{y}^2 = {rhs})"),
                json!({"d": s(&d), "rhs": rhs, "solution": [s(&t), s(&u)]}),
            )
        }
        QformCmd::Auto(Triple { a, b, c }) => {
            let f = Form::new(a, b, c);
            let mats = match f.classify()? {
                FormClass::Indefinite => vec![qform::automorphism_from_period(&f)?],
                _ => qform::definite_automorphisms(&f)?,
            };
            let text = mats
                .iter()
                .map(Mat2::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            simple(
                text,
                json!({"form": form_json(&f), "automorphisms": mats.iter().map(matrix_json).collect::<Vec<_>>()}),
            )
        }
        QformCmd::Equiv { coefs } => {
            let f1 = Form::new(coefs[0].clone(), coefs[1].clone(), coefs[2].clone());
            let f2 = Form::new(coefs[3].clone(), coefs[4].clone(), coefs[5].clone());
            let w = qform::properly_equivalent(&f1, &f2)?;
            let text = match &w {
                Some(m) => format!("{f1} ~ {f2} via {m}"),
                None => format!("{f1} and {f2} are not properly equivalent"),
            };
            simple(
                text,
                json!({"f1": form_json(&f1), "f2": form_json(&f2), "witness": w.as_ref().map(matrix_json)}),
            )
        }
    }
}

fn qform_reduce(form: &Form) -> Result<Rendered> {
    let rep = qform::reduce(form)?;
    let pcf = cf_of_surd(&qform::surd_of_form(form)?)?;
    let mut t = Table::new(["j", "G_j", "q_j", "F_j", "T_j", "A_j"]).with_row_rules();
    for row in &rep.rows {
        t.multi_row(vec![
            vec![row.j.to_string()],
            vec![form_cell(&row.g)],
            vec![row.q.to_string()],
            vec![form_cell(&row.f)],
            matrix_lines(&row.t),
            matrix_lines(&row.a),
        ]);
    }
    let auto = rep.automorphism();
    let start = rep.period_start;
    let end = rep.rows.last().map_or(start, |r| r.j);
    let text = format!(
        "F = {form}, D = {}, q_0 = {}\n{}\nX(F) = {pcf}\nperiod: j* = {start}, L = {}\nautomorph T_{end} T_{start}^-1 = {auto}\n",
        rep.discriminant,
        rep.q0,
        t.render(),
        rep.period_length,
    );
    let json = json!({
        "form": form_json(form),
        "discriminant": s(&rep.discriminant),
        "q0": s(&rep.q0),
        "rows": rep.rows.iter().map(|r| json!({
            "j": r.j,
            "g": form_json(&r.g),
            "q": s(&r.q),
            "f": form_json(&r.f),
            "t": matrix_json(&r.t),
            "a": matrix_json(&r.a),
        })).collect::<Vec<_>>(),
        "period_start": start,
        "period_length": rep.period_length,
        "automorphism": matrix_json(&auto),
    });
    Ok(Rendered { text, json })
}

fn perm_of(text: &str, degree: Option<usize>, at_least: usize) -> Result<Permutation> {
    let cycles = parse_cycles(text)?;
    let top = cycles.iter().flatten().copied().max().unwrap_or(0);
    let n = degree.unwrap_or(top.max(at_least));
    Permutation::from_cycles(n, &cycles)
}

fn max_point(text: &str) -> Result<usize> {
    Ok(parse_cycles(text)?
        .iter()
        .flatten()
        .copied()
        .max()
        .unwrap_or(0))
}

fn perm_json(p: &Permutation) -> Value {
    json!({
        "degree": p.degree(),
        "cycles": p.cycles(false),
        "sign": p.sign(),
    })
}

fn permcmd(cmd: PermCmd) -> Result<Rendered> {
    match cmd {
        PermCmd::Sign(PermArg { cycles, degree }) => {
            let p = perm_of(&cycles, degree, 0)?;
            simple(p.sign().to_string(), perm_json(&p))
        }
        PermCmd::Cycles(PermArg { cycles, degree }) => {
            let p = perm_of(&cycles, degree, 0)?;
            let ts: Vec<String> = p
                .to_transpositions()
                .iter()
                .map(|(i, j)| format!("({i},{j})"))
                .collect();
            let mut json = perm_json(&p);
            json["transpositions"] = json!(p.to_transpositions());
            simple(format!("{p}\n{}", ts.join("")), json)
        }
        PermCmd::Compose { f, g, degree } => {
            let n = max_point(&f)?.max(max_point(&g)?);
            let pf = perm_of(&f, degree, n)?;
            let pg = perm_of(&g, degree, n)?;
            let h = pf.compose(&pg)?;
            simple(h.to_string(), perm_json(&h))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &[&str]) -> Outcome {
        run(std::iter::once("zahlen").chain(args.iter().copied()))
    }

    #[test]
    fn surd_rendering() {
        let x =
            QuadraticSurd::new(BigInt::from(-17), BigInt::from(-29), BigInt::from(365)).unwrap();
        assert_eq!(render_surd(&x), "-(sqrt(365)+29)/34");
        let x = QuadraticSurd::new(BigInt::from(17), BigInt::from(-39), BigInt::from(365)).unwrap();
        assert_eq!(render_surd(&x), "(sqrt(365)+39)/34");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(out(&["gcd", "12", "18"]).code, 0);
        assert_eq!(out(&["gcd", "0", "0"]).code, 1);
        assert_eq!(out(&["frobnicate"]).code, 2);
        assert_eq!(out(&["cf", "sqrt(7"]).code, 2);
        assert_eq!(out(&["cf", "sqrt(9)"]).code, 1);
        assert_eq!(out(&["mod", "inv", "4", "6"]).code, 1);
    }

    #[test]
    fn small_commands() {
        assert_eq!(out(&["mod", "order", "2", "17"]).stdout, "8\n");
        assert_eq!(out(&["mod", "primroot", "8"]).stdout, "none\n");
        assert_eq!(out(&["mod", "crt", "2:3", "3:5"]).stdout, "8 (mod 15)\n");
        assert_eq!(out(&["qr", "jacobi", "-6", "101"]).stdout, "1\n");
        assert_eq!(out(&["qr", "count", "1", "360"]).stdout, "16\n");
        assert_eq!(
            out(&["qr", "sqrtmod", "-1", "65", "--all-solutions"]).stdout,
            "8 18 47 57\n"
        );
        assert_eq!(
            out(&["qform", "pell", "8"]).stdout,
            "t = 6, u = 2  (t^2 - 8*u^2 = 4)\n"
        );
        assert_eq!(out(&["perm", "sign", "( 1 2 )( 4 6 5 )"]).stdout, "-1\n");
        assert_eq!(
            out(&["farey", "approx", "sqrt(7)", "200"]).stdout,
            "463/175 127/48\n"
        );
        assert_eq!(
            out(&["cf", "sqrt(7)"]).stdout.lines().last(),
            Some("<2; overline(1,1,1,4)>")
        );
    }
}
