//! Flat `key = value` run files.
//!
//! ```text
//! # comments run to end of line
//! kind = nbody
//! tolerance = 50
//! out = results/orbit
//! ```
//!
//! `kind` is mandatory. Every kind accepts `seed` and `out`; anything else
//! must be a key of that kind, otherwise parsing fails with the line number.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;
use trisim_core::agents::{MoveRule, SchellingConfig};
use trisim_core::cellular::{Boundary, Topology};
use trisim_core::nbody::{NBodyConfig, SatelliteModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {n}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

fn err(line: impl Into<Option<usize>>, message: impl Into<String>) -> ConfigError {
    ConfigError { line: line.into(), message: message.into() }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NBodyRun {
    pub sim: NBodyConfig,
    /// Optional plausibility bounds for the realism guard, kg.
    pub mass_min: Option<f64>,
    pub mass_max: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EcaPattern {
    #[default]
    Centre,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EcaConfig {
    pub rule: u8,
    pub width: usize,
    pub steps: usize,
    pub boundary: Boundary,
    pub pattern: EcaPattern,
    pub density: f64,
    pub seed: u64,
}

impl Default for EcaConfig {
    fn default() -> Self {
        EcaConfig {
            rule: 30,
            width: 63,
            steps: 31,
            boundary: Boundary::Zero,
            pattern: EcaPattern::Centre,
            density: 0.5,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LifePattern {
    #[default]
    Glider,
    Blinker,
    Block,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LifeConfig {
    pub rows: usize,
    pub cols: usize,
    pub steps: usize,
    pub topology: Topology,
    pub pattern: LifePattern,
    pub density: f64,
    pub seed: u64,
}

impl Default for LifeConfig {
    fn default() -> Self {
        LifeConfig {
            rows: 16,
            cols: 16,
            steps: 16,
            topology: Topology::Torus,
            pattern: LifePattern::Glider,
            density: 0.3,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Schelling1dConfig {
    pub max_sweeps: usize,
    pub seed: u64,
}

impl Default for Schelling1dConfig {
    fn default() -> Self {
        Schelling1dConfig { max_sweeps: 100, seed: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum McFunction {
    Const,
    X,
    #[default]
    QuarterCircle,
}

impl McFunction {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            McFunction::Const => 1.0,
            McFunction::X => x,
            McFunction::QuarterCircle => (1.0 - x * x).max(0.0).sqrt(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McConfig {
    pub n: usize,
    pub a: f64,
    pub b: f64,
    pub function: McFunction,
    pub seed: u64,
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig { n: 1_000_000, a: 0.0, b: 1.0, function: McFunction::QuarterCircle, seed: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RunConfig {
    NBody(NBodyRun),
    Eca(EcaConfig),
    Life(LifeConfig),
    Schelling(SchellingConfig),
    Schelling1d(Schelling1dConfig),
    Mc(McConfig),
}

impl RunConfig {
    pub fn kind(&self) -> &'static str {
        match self {
            RunConfig::NBody(_) => "nbody",
            RunConfig::Eca(_) => "eca",
            RunConfig::Life(_) => "life",
            RunConfig::Schelling(_) => "schelling",
            RunConfig::Schelling1d(_) => "schelling1d",
            RunConfig::Mc(_) => "mc",
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            RunConfig::NBody(c) => c.sim.seed,
            RunConfig::Eca(c) => c.seed,
            RunConfig::Life(c) => c.seed,
            RunConfig::Schelling(c) => c.seed,
            RunConfig::Schelling1d(c) => c.seed,
            RunConfig::Mc(c) => c.seed,
        }
    }

    pub fn set_seed(&mut self, seed: u64) {
        match self {
            RunConfig::NBody(c) => c.sim.seed = seed,
            RunConfig::Eca(c) => c.seed = seed,
            RunConfig::Life(c) => c.seed = seed,
            RunConfig::Schelling(c) => c.seed = seed,
            RunConfig::Schelling1d(c) => c.seed = seed,
            RunConfig::Mc(c) => c.seed = seed,
        }
    }
}

/// A parsed run file: the typed configuration plus the output prefix.
#[derive(Debug, Clone, PartialEq)]
pub struct RunFile {
    pub config: RunConfig,
    pub out: Option<String>,
}

const NBODY_KEYS: &[&str] = &[
    "G", "planet_mass", "satellite_mass", "dt0", "t_total", "origin_body", "tolerance", "d0",
    "l0", "k", "c", "e0", "record_every", "satellite", "mass_min", "mass_max",
];
const ECA_KEYS: &[&str] = &["rule", "width", "steps", "boundary", "pattern", "density"];
const LIFE_KEYS: &[&str] = &["rows", "cols", "steps", "topology", "pattern", "density"];
const SCHELLING_KEYS: &[&str] = &[
    "rows", "cols", "frac_a", "frac_b", "frac_empty", "threshold", "max_sweeps", "move_rule",
];
const SCHELLING1D_KEYS: &[&str] = &["max_sweeps"];
const MC_KEYS: &[&str] = &["n", "a", "b", "function"];

struct Entries {
    map: BTreeMap<String, (String, usize)>,
}

impl Entries {
    fn take<T>(&mut self, key: &str, parse: impl Fn(&str) -> Option<T>, expected: &str) -> Result<Option<T>, ConfigError> {
        match self.map.remove(key) {
            None => Ok(None),
            Some((raw, line)) => parse(&raw)
                .map(Some)
                .ok_or_else(|| err(line, format!("`{key}`: expected {expected}, got `{raw}`"))),
        }
    }

    fn real(&mut self, key: &str, slot: &mut f64) -> Result<(), ConfigError> {
        if let Some(v) = self.take(key, |s| f64::from_str(s).ok().filter(|v| v.is_finite()), "a finite number")? {
            *slot = v;
        }
        Ok(())
    }

    fn count(&mut self, key: &str, slot: &mut usize) -> Result<(), ConfigError> {
        if let Some(v) = self.take(key, |s| usize::from_str(s).ok(), "a non-negative integer")? {
            *slot = v;
        }
        Ok(())
    }

    fn word<T: Copy>(&mut self, key: &str, slot: &mut T, table: &[(&str, T)]) -> Result<(), ConfigError> {
        let names: Vec<&str> = table.iter().map(|(n, _)| *n).collect();
        let expected = format!("one of {}", names.join(", "));
        if let Some(v) = self.take(key, |s| table.iter().find(|(n, _)| *n == s).map(|(_, v)| *v), &expected)? {
            *slot = v;
        }
        Ok(())
    }
}

const BOUNDARIES: &[(&str, Boundary)] = &[("zero", Boundary::Zero), ("wrap", Boundary::Wrap)];
const TOPOLOGIES: &[(&str, Topology)] = &[("torus", Topology::Torus), ("dead_border", Topology::DeadBorder)];
const SATELLITES: &[(&str, SatelliteModel)] = &[("triangle", SatelliteModel::Triangle), ("point", SatelliteModel::Point)];
const ECA_PATTERNS: &[(&str, EcaPattern)] = &[("centre", EcaPattern::Centre), ("random", EcaPattern::Random)];
const LIFE_PATTERNS: &[(&str, LifePattern)] = &[
    ("glider", LifePattern::Glider),
    ("blinker", LifePattern::Blinker),
    ("block", LifePattern::Block),
    ("random", LifePattern::Random),
];
const MOVE_RULES: &[(&str, MoveRule)] = &[
    ("nearest_satisfying", MoveRule::NearestSatisfying),
    ("random_vacancy", MoveRule::RandomVacancy),
];
const FUNCTIONS: &[(&str, McFunction)] = &[
    ("const", McFunction::Const),
    ("x", McFunction::X),
    ("quarter_circle", McFunction::QuarterCircle),
];

fn name_of<T: PartialEq>(table: &[(&'static str, T)], value: T) -> &'static str {
    table.iter().find(|(_, v)| *v == value).map(|(n, _)| *n).expect("every variant is named")
}

/// Parse a run file, filling unspecified keys with defaults and checking the
/// result.
pub fn parse_config(text: &str) -> Result<RunFile, ConfigError> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .ok_or_else(|| err(line, format!("expected `key = value`, got `{body}`")))?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(err(line, format!("invalid key `{key}`")));
        }
        if value.is_empty() {
            return Err(err(line, format!("`{key}` has no value")));
        }
        if let Some((_, first)) = map.insert(key.to_string(), (value.to_string(), line)) {
            return Err(err(line, format!("`{key}` already set on line {first}")));
        }
    }

    let mut e = Entries { map };
    let kind = e
        .map
        .remove("kind")
        .ok_or_else(|| err(None, "missing `kind` (nbody, eca, life, schelling, schelling1d or mc)"))?;
    let allowed = match kind.0.as_str() {
        "nbody" => NBODY_KEYS,
        "eca" => ECA_KEYS,
        "life" => LIFE_KEYS,
        "schelling" => SCHELLING_KEYS,
        "schelling1d" => SCHELLING1D_KEYS,
        "mc" => MC_KEYS,
        other => return Err(err(kind.1, format!("unknown kind `{other}`"))),
    };
    if let Some((key, (_, line))) = e
        .map
        .iter()
        .filter(|(k, _)| !allowed.contains(&k.as_str()) && *k != "seed" && *k != "out")
        .min_by_key(|(_, (_, line))| *line)
    {
        return Err(err(*line, format!("unknown key `{key}` for kind {}", kind.0)));
    }

    let out = e.map.remove("out").map(|(v, _)| v);
    let mut seed = 0u64;
    if let Some(v) = e.take("seed", |s| u64::from_str(s).ok(), "a non-negative integer")? {
        seed = v;
    }

    let config = match kind.0.as_str() {
        "nbody" => {
            let mut c = NBodyConfig { seed, ..NBodyConfig::default() };
            e.real("G", &mut c.g)?;
            e.real("planet_mass", &mut c.planet_mass)?;
            e.real("satellite_mass", &mut c.satellite_mass)?;
            e.real("dt0", &mut c.dt0)?;
            e.real("t_total", &mut c.t_total)?;
            e.count("origin_body", &mut c.origin_body)?;
            e.real("tolerance", &mut c.tolerance)?;
            e.real("d0", &mut c.d0)?;
            e.real("l0", &mut c.spring.l0)?;
            e.real("k", &mut c.spring.k)?;
            e.real("c", &mut c.spring.c)?;
            e.real("e0", &mut c.e0)?;
            e.count("record_every", &mut c.record_every)?;
            e.word("satellite", &mut c.satellite, SATELLITES)?;
            let finite = |s: &str| f64::from_str(s).ok().filter(|v| v.is_finite());
            let mass_min = e.take("mass_min", finite, "a finite number")?;
            let mass_max = e.take("mass_max", finite, "a finite number")?;
            c.validate().map_err(|x| err(None, x.to_string()))?;
            RunConfig::NBody(NBodyRun { sim: c, mass_min, mass_max })
        }
        "eca" => {
            let mut c = EcaConfig { seed, ..EcaConfig::default() };
            let mut rule = c.rule as usize;
            let line = e.map.get("rule").map(|v| v.1);
            e.count("rule", &mut rule)?;
            c.rule = u8::try_from(rule).map_err(|_| err(line, format!("`rule` must be 0..=255, got {rule}")))?;
            e.count("width", &mut c.width)?;
            e.count("steps", &mut c.steps)?;
            e.word("boundary", &mut c.boundary, BOUNDARIES)?;
            e.word("pattern", &mut c.pattern, ECA_PATTERNS)?;
            e.real("density", &mut c.density)?;
            if c.width == 0 {
                return Err(err(None, "`width` must be at least 1"));
            }
            check_density(c.density)?;
            RunConfig::Eca(c)
        }
        "life" => {
            let mut c = LifeConfig { seed, ..LifeConfig::default() };
            e.count("rows", &mut c.rows)?;
            e.count("cols", &mut c.cols)?;
            e.count("steps", &mut c.steps)?;
            e.word("topology", &mut c.topology, TOPOLOGIES)?;
            e.word("pattern", &mut c.pattern, LIFE_PATTERNS)?;
            e.real("density", &mut c.density)?;
            if c.rows == 0 || c.cols == 0 {
                return Err(err(None, "`rows` and `cols` must be at least 1"));
            }
            check_density(c.density)?;
            RunConfig::Life(c)
        }
        "schelling" => {
            let mut c = SchellingConfig { seed, ..SchellingConfig::default() };
            e.count("rows", &mut c.rows)?;
            e.count("cols", &mut c.cols)?;
            e.real("frac_a", &mut c.frac_a)?;
            e.real("frac_b", &mut c.frac_b)?;
            e.real("frac_empty", &mut c.frac_empty)?;
            e.real("threshold", &mut c.threshold)?;
            e.count("max_sweeps", &mut c.max_sweeps)?;
            e.word("move_rule", &mut c.move_rule, MOVE_RULES)?;
            c.validate().map_err(|x| err(None, x.to_string()))?;
            RunConfig::Schelling(c)
        }
        "schelling1d" => {
            let mut c = Schelling1dConfig { seed, ..Schelling1dConfig::default() };
            e.count("max_sweeps", &mut c.max_sweeps)?;
            RunConfig::Schelling1d(c)
        }
        _ => {
            let mut c = McConfig { seed, ..McConfig::default() };
            e.count("n", &mut c.n)?;
            e.real("a", &mut c.a)?;
            e.real("b", &mut c.b)?;
            e.word("function", &mut c.function, FUNCTIONS)?;
            if c.n < 2 {
                return Err(err(None, format!("`n` must be at least 2, got {}", c.n)));
            }
            if !(c.b > c.a) {
                return Err(err(None, format!("need a < b, got a = {}, b = {}", c.a, c.b)));
            }
            RunConfig::Mc(c)
        }
    };
    debug_assert!(e.map.is_empty());
    Ok(RunFile { config, out })
}

fn check_density(d: f64) -> Result<(), ConfigError> {
    if (0.0..=1.0).contains(&d) {
        Ok(())
    } else {
        Err(err(None, format!("`density` must lie in [0, 1], got {d}")))
    }
}

/// Render every key, defaults included, so the output parses back to the
/// same value.
pub fn print_config(file: &RunFile) -> String {
    let mut s = String::new();
    let mut kv = |k: &str, v: &dyn fmt::Debug| {
        let _ = writeln!(s, "{k} = {v:?}");
    };
    macro_rules! word {
        ($k:expr, $v:expr) => {
            kv($k, &format_args!("{}", $v))
        };
    }
    word!("kind", file.config.kind());
    match &file.config {
        RunConfig::NBody(r) => {
            let c = &r.sim;
            kv("G", &c.g);
            kv("planet_mass", &c.planet_mass);
            kv("satellite_mass", &c.satellite_mass);
            kv("dt0", &c.dt0);
            kv("t_total", &c.t_total);
            kv("origin_body", &c.origin_body);
            kv("tolerance", &c.tolerance);
            kv("d0", &c.d0);
            kv("l0", &c.spring.l0);
            kv("k", &c.spring.k);
            kv("c", &c.spring.c);
            kv("e0", &c.e0);
            kv("record_every", &c.record_every);
            word!("satellite", name_of(SATELLITES, c.satellite));
            if let Some(m) = r.mass_min {
                kv("mass_min", &m);
            }
            if let Some(m) = r.mass_max {
                kv("mass_max", &m);
            }
        }
        RunConfig::Eca(c) => {
            kv("rule", &c.rule);
            kv("width", &c.width);
            kv("steps", &c.steps);
            word!("boundary", name_of(BOUNDARIES, c.boundary));
            word!("pattern", name_of(ECA_PATTERNS, c.pattern));
            kv("density", &c.density);
        }
        RunConfig::Life(c) => {
            kv("rows", &c.rows);
            kv("cols", &c.cols);
            kv("steps", &c.steps);
            word!("topology", name_of(TOPOLOGIES, c.topology));
            word!("pattern", name_of(LIFE_PATTERNS, c.pattern));
            kv("density", &c.density);
        }
        RunConfig::Schelling(c) => {
            kv("rows", &c.rows);
            kv("cols", &c.cols);
            kv("frac_a", &c.frac_a);
            kv("frac_b", &c.frac_b);
            kv("frac_empty", &c.frac_empty);
            kv("threshold", &c.threshold);
            kv("max_sweeps", &c.max_sweeps);
            word!("move_rule", name_of(MOVE_RULES, c.move_rule));
        }
        RunConfig::Schelling1d(c) => kv("max_sweeps", &c.max_sweeps),
        RunConfig::Mc(c) => {
            kv("n", &c.n);
            kv("a", &c.a);
            kv("b", &c.b);
            word!("function", name_of(FUNCTIONS, c.function));
        }
    }
    kv("seed", &file.config.seed());
    if let Some(out) = &file.out {
        word!("out", out);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nbody(text: &str) -> NBodyRun {
        match parse_config(text).unwrap().config {
            RunConfig::NBody(r) => r,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_nbody_gets_defaults() {
        let r = nbody("kind = nbody\n");
        let c = r.sim;
        assert_eq!(c, NBodyConfig::default());
        assert_eq!((c.planet_mass, c.satellite_mass, c.dt0, c.t_total), (2e27, 3e22, 10.0, 125000.0));
        assert_eq!((c.tolerance, c.d0, c.spring.l0, c.e0), (100.0, 1e8, 1e6, 0.6));
        assert_eq!((r.mass_min, r.mass_max), (None, None));
    }

    #[test]
    fn minimal_mc() {
        let f = parse_config("kind = mc\nn = 2\n").unwrap();
        assert_eq!(f.config, RunConfig::Mc(McConfig { n: 2, ..McConfig::default() }));
    }

    #[test]
    fn misspelled_key_is_named_with_its_line() {
        let e = parse_config("kind = nbody\n# note\ntolernace = 5\n").unwrap_err();
        assert_eq!(e.line, Some(3));
        assert!(e.message.contains("tolernace"), "{e}");
    }

    #[test]
    fn syntax_and_type_errors_carry_lines() {
        assert_eq!(parse_config("kind = eca\nwidth 5\n").unwrap_err().line, Some(2));
        assert_eq!(parse_config("kind = eca\n\nwidth = five\n").unwrap_err().line, Some(3));
        assert_eq!(parse_config("kind = eca\nrule = 256\n").unwrap_err().line, Some(2));
        assert_eq!(parse_config("kind = eca\nrule = 1\nrule = 2\n").unwrap_err().line, Some(3));
        assert_eq!(parse_config("kind = eca\nboundary = klein\n").unwrap_err().line, Some(2));
        assert_eq!(parse_config("kind = nbody\nG = nan\n").unwrap_err().line, Some(2));
    }

    #[test]
    fn kind_is_required_and_known() {
        assert_eq!(parse_config("rule = 30\n").unwrap_err().line, None);
        assert_eq!(parse_config("kind = fluid\n").unwrap_err().line, Some(1));
    }

    #[test]
    fn keys_belong_to_their_kind() {
        assert!(parse_config("kind = mc\nrule = 30\n").is_err());
        let f = parse_config("kind = schelling1d\nseed = 4\nout = x/y\n").unwrap();
        assert_eq!(f.out.as_deref(), Some("x/y"));
        assert_eq!(f.config.seed(), 4);
    }

    #[test]
    fn inline_comments_and_blank_lines() {
        let f = parse_config("\n  kind = life   # grid\n\nrows = 8 # small\ncols=9\n").unwrap();
        match f.config {
            RunConfig::Life(c) => assert_eq!((c.rows, c.cols), (8, 9)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn semantic_checks_are_config_errors() {
        assert!(parse_config("kind = nbody\nl0 = 2e8\n").is_err());
        assert!(parse_config("kind = schelling\nfrac_a = 0.9\n").is_err());
        assert!(parse_config("kind = mc\na = 1\nb = 1\n").is_err());
        assert!(parse_config("kind = eca\ndensity = 1.5\n").is_err());
    }

    #[test]
    fn printed_defaults_parse_back() {
        for kind in ["nbody", "eca", "life", "schelling", "schelling1d", "mc"] {
            let f = parse_config(&format!("kind = {kind}\n")).unwrap();
            assert_eq!(parse_config(&print_config(&f)).unwrap(), f, "{kind}");
        }
    }
}
