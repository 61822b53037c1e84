//! Sliced tangle words and their text grammar.
//!
//! Slices are read top to bottom. A `+` strand runs downwards, a `-` strand
//! upwards.

use std::fmt;

use super::KontsevichError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn parse(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '−' => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One horizontal generator of a slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Id(Sign),
    /// `X+` is the braiding, `X-` its inverse; `sing` marks a double point.
    Cross { positive: bool, sing: bool },
    /// Creates two strands with the given signs.
    Cup(Sign, Sign),
    /// Annihilates two strands with the given signs.
    Cap(Sign, Sign),
    /// Framing curl, `kink+` adds one to the framing.
    Kink(bool),
}

impl Gen {
    pub fn arity_in(&self) -> usize {
        match self {
            Gen::Id(_) | Gen::Kink(_) => 1,
            Gen::Cross { .. } | Gen::Cap(..) => 2,
            Gen::Cup(..) => 0,
        }
    }

    pub fn arity_out(&self) -> usize {
        match self {
            Gen::Id(_) | Gen::Kink(_) => 1,
            Gen::Cross { .. } | Gen::Cup(..) => 2,
            Gen::Cap(..) => 0,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Id(s) => write!(f, "id({s})"),
            Gen::Cross { positive, sing } => {
                write!(f, "X{}", if *positive { '+' } else { '-' })?;
                if *sing {
                    write!(f, " sing")?;
                }
                Ok(())
            }
            Gen::Cup(a, b) => write!(f, "cup({a}{b})"),
            Gen::Cap(a, b) => write!(f, "cap({a}{b})"),
            Gen::Kink(p) => write!(f, "kink{}", if *p { '+' } else { '-' }),
        }
    }
}

/// A single-generator step at strand position `pos` of the object above it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Event {
    pub pos: usize,
    pub gen: Gen,
}

/// Validated sliced tangle.
#[derive(Clone, PartialEq, Eq)]
pub struct TangleWord {
    top: Vec<Sign>,
    slices: Vec<Vec<Gen>>,
}

impl TangleWord {
    /// Checks that every slice matches the object above it.
    pub fn new(top: Vec<Sign>, slices: Vec<Vec<Gen>>) -> Result<Self, KontsevichError> {
        let w = TangleWord { top, slices };
        w.objects()?;
        Ok(w)
    }

    pub fn top(&self) -> &[Sign] {
        &self.top
    }

    pub fn slices(&self) -> &[Vec<Gen>] {
        &self.slices
    }

    pub fn bottom(&self) -> Vec<Sign> {
        self.objects().unwrap().pop().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        self.top.is_empty() && self.bottom().is_empty()
    }

    /// The sign word above each slice and below the last one.
    fn objects(&self) -> Result<Vec<Vec<Sign>>, KontsevichError> {
        let mut obj = self.top.clone();
        let mut out = vec![obj.clone()];
        for (si, slice) in self.slices.iter().enumerate() {
            let need: usize = slice.iter().map(Gen::arity_in).sum();
            if need != obj.len() {
                return Err(KontsevichError::Boundary(format!(
                    "slice {} consumes {need} strands but {} are present",
                    si + 1,
                    obj.len()
                )));
            }
            let mut next = Vec::new();
            let mut i = 0;
            for g in slice {
                let input = &obj[i..i + g.arity_in()];
                let bad = |what: &str| {
                    KontsevichError::Boundary(format!("slice {}: {g} cannot act on {what}", si + 1))
                };
                match *g {
                    Gen::Id(s) => {
                        if input[0] != s {
                            return Err(bad(&input[0].to_string()));
                        }
                        next.push(s);
                    }
                    Gen::Kink(_) => next.push(input[0]),
                    Gen::Cross { .. } => {
                        next.push(input[1]);
                        next.push(input[0]);
                    }
                    Gen::Cup(a, b) => {
                        if a == b {
                            return Err(KontsevichError::Syntax(format!("cup({a}{b}) needs opposite signs")));
                        }
                        next.push(a);
                        next.push(b);
                    }
                    Gen::Cap(a, b) => {
                        if a == b {
                            return Err(KontsevichError::Syntax(format!("cap({a}{b}) needs opposite signs")));
                        }
                        if input != [a, b] {
                            return Err(bad(&format!("{}{}", input[0], input[1])));
                        }
                    }
                }
                i += g.arity_in();
            }
            obj = next;
            out.push(obj.clone());
        }
        Ok(out)
    }

    /// Single-generator steps, each slice split left to right.
    pub fn events(&self) -> Vec<Event> {
        let mut out = Vec::new();
        for slice in &self.slices {
            // positions of earlier generators already moved by their output
            let mut pos = 0;
            for g in slice {
                if !matches!(g, Gen::Id(_)) {
                    out.push(Event { pos, gen: *g });
                }
                pos += g.arity_out();
            }
        }
        out
    }

    /// Number of double points.
    pub fn double_points(&self) -> usize {
        self.slices.iter().flatten().filter(|g| matches!(g, Gen::Cross { sing: true, .. })).count()
    }

    /// Copy with every generator replaced by `f`.
    pub fn map_gens(&self, mut f: impl FnMut(usize, Gen) -> Gen) -> TangleWord {
        let mut k = 0;
        let slices = self
            .slices
            .iter()
            .map(|s| {
                s.iter()
                    .map(|&g| {
                        let r = f(k, g);
                        k += 1;
                        r
                    })
                    .collect()
            })
            .collect();
        TangleWord { top: self.top.clone(), slices }
    }

    /// Word text in the slice grammar.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if !self.top.is_empty() {
            let t: Vec<String> = self.top.iter().map(Sign::to_string).collect();
            s.push_str(&format!("obj: {}\n", t.join(" ")));
        }
        for slice in &self.slices {
            let g: Vec<String> = slice.iter().map(Gen::to_string).collect();
            s.push_str(&format!("slice: {}\n", g.join(" ")));
        }
        s
    }

    /// Turns a closed one-component word into a (1,1)-tangle by opening its
    /// last cap: the two loose ends are pulled to the top and bottom.
    pub fn slit(&self) -> Result<TangleWord, KontsevichError> {
        if !self.is_closed() {
            return Err(KontsevichError::NotClosed);
        }
        let mut slices = self.slices.clone();
        let last = slices.pop().ok_or(KontsevichError::NotClosed)?;
        let cap = match last.as_slice() {
            [Gen::Cap(a, b)] => (*a, *b),
            _ => return Err(KontsevichError::Syntax("slitting needs a final slice with a single cap".into())),
        };
        let (new_slices, fin) = match cap {
            (Sign::Plus, Sign::Minus) => (
                slices
                    .into_iter()
                    .map(|mut s| {
                        s.push(Gen::Id(Sign::Plus));
                        s
                    })
                    .collect::<Vec<_>>(),
                vec![Gen::Id(Sign::Plus), Gen::Cap(Sign::Minus, Sign::Plus)],
            ),
            _ => (
                slices
                    .into_iter()
                    .map(|mut s| {
                        s.insert(0, Gen::Id(Sign::Plus));
                        s
                    })
                    .collect::<Vec<_>>(),
                vec![Gen::Cap(Sign::Plus, Sign::Minus), Gen::Id(Sign::Plus)],
            ),
        };
        let mut all = new_slices;
        all.push(fin);
        TangleWord::new(vec![Sign::Plus], all)
    }

    /// All `2^m` resolutions of the double points with their signs. A double
    /// point resolves to its positive crossing minus its negative crossing,
    /// positivity taken with respect to the strand orientations.
    pub fn resolve_singular(&self) -> Vec<(i64, TangleWord)> {
        let objs = self.objects().unwrap();
        let mut orient = Vec::new();
        for (slice, obj) in self.slices.iter().zip(&objs) {
            let mut i = 0;
            for g in slice {
                if let Gen::Cross { sing: true, .. } = g {
                    orient.push(obj[i].value() * obj[i + 1].value());
                }
                i += g.arity_in();
            }
        }
        let m = orient.len();
        let mut out = Vec::with_capacity(1 << m);
        for mask in 0..(1usize << m) {
            let mut k = 0;
            let w = self.map_gens(|_, g| match g {
                Gen::Cross { sing: true, .. } => {
                    let negative = mask >> k & 1 == 1;
                    let positive = (orient[k] > 0) != negative;
                    k += 1;
                    Gen::Cross { positive, sing: false }
                }
                other => other,
            });
            let sign = if mask.count_ones() % 2 == 1 { -1 } else { 1 };
            out.push((sign, w));
        }
        out
    }
}

impl fmt::Debug for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_sign_word(s: &str) -> Result<Vec<Sign>, KontsevichError> {
    s.split_whitespace()
        .flat_map(|tok| tok.chars())
        .map(|c| Sign::parse(c).ok_or_else(|| KontsevichError::Syntax(format!("bad sign {c:?}"))))
        .collect()
}

fn parse_gen(tok: &str) -> Result<Gen, KontsevichError> {
    let pair = |inner: &str| -> Result<(Sign, Sign), KontsevichError> {
        let s: Vec<Sign> = parse_sign_word(inner)?;
        match s.as_slice() {
            [a, b] => Ok((*a, *b)),
            _ => Err(KontsevichError::Syntax(format!("{tok}: expected two signs"))),
        }
    };
    let inner = |prefix: &str| tok.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
    if let Some(i) = inner("id(") {
        let s = parse_sign_word(i)?;
        return match s.as_slice() {
            [x] => Ok(Gen::Id(*x)),
            _ => Err(KontsevichError::Syntax(format!("{tok}: expected one sign"))),
        };
    }
    if let Some(i) = inner("cup(") {
        let (a, b) = pair(i)?;
        return Ok(Gen::Cup(a, b));
    }
    if let Some(i) = inner("cap(") {
        let (a, b) = pair(i)?;
        return Ok(Gen::Cap(a, b));
    }
    match tok {
        "X+" => Ok(Gen::Cross { positive: true, sing: false }),
        "X-" => Ok(Gen::Cross { positive: false, sing: false }),
        "kink+" => Ok(Gen::Kink(true)),
        "kink-" => Ok(Gen::Kink(false)),
        _ => Err(KontsevichError::Syntax(format!("unknown generator {tok:?}"))),
    }
}

fn parse_slice(body: &str) -> Result<Vec<Gen>, KontsevichError> {
    let mut gens: Vec<Gen> = Vec::new();
    for tok in body.split_whitespace() {
        if tok == "sing" {
            match gens.last_mut() {
                Some(Gen::Cross { sing, .. }) if !*sing => *sing = true,
                _ => return Err(KontsevichError::Syntax("`sing` must follow a crossing".into())),
            }
            continue;
        }
        gens.push(parse_gen(tok)?);
    }
    Ok(gens)
}

/// `braid[n]: s1 s2^-1 k1 ... ; close`
fn parse_braid(n: usize, body: &str) -> Result<TangleWord, KontsevichError> {
    if n == 0 {
        return Err(KontsevichError::Syntax("braid needs at least one strand".into()));
    }
    let mut parts = body.split(';').map(str::trim);
    let gens_part = parts.next().unwrap_or("");
    let mut close = false;
    for p in parts {
        match p {
            "" => {}
            "close" if !close => close = true,
            "close" => return Err(KontsevichError::Syntax("braid closed twice".into())),
            other => return Err(KontsevichError::Syntax(format!("unknown braid directive {other:?}"))),
        }
    }
    let mut events: Vec<(usize, Gen)> = Vec::new();
    for tok in gens_part.split_whitespace() {
        if tok == "sing" {
            match events.last_mut() {
                Some((_, Gen::Cross { sing, .. })) if !*sing => *sing = true,
                _ => return Err(KontsevichError::Syntax("`sing` must follow a braid generator".into())),
            }
            continue;
        }
        let (body, inverse) = match tok.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (tok.strip_suffix("^1").unwrap_or(tok), false),
        };
        let (kind, idx) = body.split_at(1.min(body.len()));
        let i: usize = idx.parse().map_err(|_| KontsevichError::Syntax(format!("bad braid token {tok:?}")))?;
        match kind {
            "s" => {
                if i == 0 || i >= n {
                    return Err(KontsevichError::Syntax(format!("{tok}: generator out of range for {n} strands")));
                }
                events.push((i - 1, Gen::Cross { positive: !inverse, sing: false }));
            }
            "k" => {
                if i == 0 || i > n {
                    return Err(KontsevichError::Syntax(format!("{tok}: strand out of range")));
                }
                events.push((i - 1, Gen::Kink(!inverse)));
            }
            _ => return Err(KontsevichError::Syntax(format!("bad braid token {tok:?}"))),
        }
    }
    let pad = if close { n } else { 0 };
    let mut slices: Vec<Vec<Gen>> = Vec::new();
    if close {
        // nested cups: strand i of the braid returns on strand 2n−1−i
        for k in 0..n {
            let mut s = vec![Gen::Id(Sign::Plus); k];
            s.push(Gen::Cup(Sign::Plus, Sign::Minus));
            s.extend(std::iter::repeat_n(Gen::Id(Sign::Minus), k));
            slices.push(s);
        }
    }
    for (i, g) in events {
        let mut s = vec![Gen::Id(Sign::Plus); i];
        s.push(g);
        let used = i + g.arity_in();
        s.extend(std::iter::repeat_n(Gen::Id(Sign::Plus), n - used));
        s.extend(std::iter::repeat_n(Gen::Id(Sign::Minus), pad));
        slices.push(s);
    }
    let top = if close { Vec::new() } else { vec![Sign::Plus; n] };
    if close {
        for k in (0..n).rev() {
            let mut s = vec![Gen::Id(Sign::Plus); k];
            s.push(Gen::Cap(Sign::Plus, Sign::Minus));
            s.extend(std::iter::repeat_n(Gen::Id(Sign::Minus), k));
            slices.push(s);
        }
    }
    TangleWord::new(top, slices)
}

/// Parses the line-oriented word grammar; `#` starts a comment.
pub fn parse_word(text: &str) -> Result<TangleWord, KontsevichError> {
    let mut top: Option<Vec<Sign>> = None;
    let mut slices = Vec::new();
    let mut braid: Option<TangleWord> = None;
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if braid.is_some() {
            return Err(KontsevichError::Syntax("a braid line must be the only statement".into()));
        }
        if line.starts_with("pd:") || line.starts_with("PD[") {
            return Err(KontsevichError::Unsupported("PD codes; give a braid closure or slices".into()));
        }
        if let Some(rest) = line.strip_prefix("obj:") {
            if top.is_some() || !slices.is_empty() {
                return Err(KontsevichError::Syntax("`obj:` must come first and only once".into()));
            }
            top = Some(parse_sign_word(rest)?);
        } else if let Some(rest) = line.strip_prefix("slice:") {
            slices.push(parse_slice(rest)?);
        } else if let Some(rest) = line.strip_prefix("braid[") {
            if top.is_some() || !slices.is_empty() {
                return Err(KontsevichError::Syntax("a braid line must be the only statement".into()));
            }
            let (n, body) = rest
                .split_once("]:")
                .ok_or_else(|| KontsevichError::Syntax("expected `braid[n]: ...`".into()))?;
            let n: usize = n.trim().parse().map_err(|_| KontsevichError::Syntax(format!("bad strand count {n:?}")))?;
            braid = Some(parse_braid(n, body)?);
        } else if let Some(rest) = line.strip_prefix("id(") {
            // bare generator lines are accepted as one-slice words
            slices.push(parse_slice(&format!("id({rest}"))?);
        } else {
            slices.push(parse_slice(line)?);
        }
    }
    if let Some(b) = braid {
        return Ok(b);
    }
    let top = match top {
        Some(t) => t,
        None => {
            // a word without `obj:` takes its top from its first slice
            slices
                .first()
                .map(|s: &Vec<Gen>| {
                    s.iter()
                        .flat_map(|g| match g {
                            Gen::Id(x) => vec![*x],
                            Gen::Cross { .. } => vec![Sign::Plus, Sign::Plus],
                            Gen::Kink(_) => vec![Sign::Plus],
                            Gen::Cap(a, b) => vec![*a, *b],
                            Gen::Cup(..) => vec![],
                        })
                        .collect()
                })
                .unwrap_or_default()
        }
    };
    TangleWord::new(top, slices)
}
