//! Color identities for packing `(1^j, 2^k)`-colorings and partial
//! assignments with the undetermined-1-color marker.

use std::fmt;

/// The multiset of packing radii: `ones` classes of radius 1 (ordinary
/// independent sets) and `twos` classes of radius 2 (2-independent sets).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PackingSpec {
    ones: u8,
    twos: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    Empty,
    ColorOutOfSpec { color: Color, spec: PackingSpec },
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Empty => write!(f, "a packing spec needs at least one color"),
            SpecError::ColorOutOfSpec { color, spec } => {
                write!(f, "color {color} outside spec {spec}")
            }
        }
    }
}

impl std::error::Error for SpecError {}

impl PackingSpec {
    pub fn new(ones: u8, twos: u8) -> Result<Self, SpecError> {
        if ones == 0 && twos == 0 {
            return Err(SpecError::Empty);
        }
        Ok(PackingSpec { ones, twos })
    }

    pub fn ones(&self) -> u8 {
        self.ones
    }

    pub fn twos(&self) -> u8 {
        self.twos
    }

    pub fn color_count(&self) -> usize {
        self.ones as usize + self.twos as usize
    }

    pub fn contains(&self, c: Color) -> bool {
        match c {
            Color::One(i) => i < self.ones,
            Color::Two(i) => i < self.twos,
        }
    }

    /// All colors in canonical order: 1-colors by index, then 2-colors.
    pub fn colors(&self) -> impl Iterator<Item = Color> + '_ {
        (0..self.ones)
            .map(Color::One)
            .chain((0..self.twos).map(Color::Two))
    }
}

impl fmt::Display for PackingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.ones {
            0 => {}
            1 => parts.push("1".to_string()),
            j => parts.push(format!("1^{j}")),
        }
        match self.twos {
            0 => {}
            1 => parts.push("2".to_string()),
            k => parts.push(format!("2^{k}")),
        }
        write!(f, "({})", parts.join(","))
    }
}

/// A concrete color: `One(i)` is the i-th 1-color (printed `1_a`, `1_b`, ...),
/// `Two(i)` the i-th 2-color (printed `2_1`, `2_2`, ...). Indices 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    One(u8),
    Two(u8),
}

impl Color {
    pub fn is_one(&self) -> bool {
        matches!(self, Color::One(_))
    }

    pub fn is_two(&self) -> bool {
        matches!(self, Color::Two(_))
    }

    /// Integer file encoding under `spec`: `1..=j` are 1-colors, `j+1..=j+k`
    /// are 2-colors (0 = uncolored and -1 = undetermined live in [`Slot`]).
    pub fn code(&self, spec: &PackingSpec) -> i32 {
        match *self {
            Color::One(i) => i as i32 + 1,
            Color::Two(i) => spec.ones() as i32 + i as i32 + 1,
        }
    }

    pub fn from_code(code: i32, spec: &PackingSpec) -> Option<Color> {
        let j = spec.ones() as i32;
        let k = spec.twos() as i32;
        if (1..=j).contains(&code) {
            Some(Color::One((code - 1) as u8))
        } else if (j + 1..=j + k).contains(&code) {
            Some(Color::Two((code - j - 1) as u8))
        } else {
            None
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Color::One(i) => {
                // 1_a, 1_b, ... wraps past 'z' into numeric form, which no
                // spec in range ever reaches
                if i < 26 {
                    write!(f, "1_{}", (b'a' + i) as char)
                } else {
                    write!(f, "1_{}", i + 1)
                }
            }
            Color::Two(i) => write!(f, "2_{}", i + 1),
        }
    }
}

/// State of one vertex in a partial coloring. `Undetermined1` is a promise of
/// some 1-color: it joins no constraint until the search resolves it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Slot {
    #[default]
    Uncolored,
    Undetermined1,
    Assigned(Color),
}

impl Slot {
    pub fn color(&self) -> Option<Color> {
        match self {
            Slot::Assigned(c) => Some(*c),
            _ => None,
        }
    }

    pub fn code(&self, spec: &PackingSpec) -> i32 {
        match self {
            Slot::Uncolored => 0,
            Slot::Undetermined1 => -1,
            Slot::Assigned(c) => c.code(spec),
        }
    }

    pub fn from_code(code: i32, spec: &PackingSpec) -> Option<Slot> {
        match code {
            0 => Some(Slot::Uncolored),
            -1 => Some(Slot::Undetermined1),
            c => Color::from_code(c, spec).map(Slot::Assigned),
        }
    }
}

/// Vertex-indexed color assignment, possibly partial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    slots: Vec<Slot>,
}

impl PartialColoring {
    pub fn empty(n: usize) -> Self {
        PartialColoring { slots: vec![Slot::Uncolored; n] }
    }

    pub fn from_slots(slots: Vec<Slot>) -> Self {
        PartialColoring { slots }
    }

    pub fn n(&self) -> usize {
        self.slots.len()
    }

    pub fn get(&self, v: usize) -> Slot {
        self.slots[v]
    }

    pub fn set(&mut self, v: usize, s: Slot) {
        self.slots[v] = s;
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn is_total(&self) -> bool {
        self.slots.iter().all(|s| matches!(s, Slot::Assigned(_)))
    }

    /// Validates every assigned color against the spec.
    pub fn check_spec(&self, spec: &PackingSpec) -> Result<(), SpecError> {
        for s in &self.slots {
            if let Slot::Assigned(c) = s {
                if !spec.contains(*c) {
                    return Err(SpecError::ColorOutOfSpec { color: *c, spec: *spec });
                }
            }
        }
        Ok(())
    }

    pub fn codes(&self, spec: &PackingSpec) -> Vec<i32> {
        self.slots.iter().map(|s| s.code(spec)).collect()
    }
}

/// Parses a spec string such as `1,2^5` or `1^2,2^7` (terms `1`, `2`,
/// optionally with `^multiplicity`, comma-separated).
pub fn parse_spec(text: &str) -> Result<PackingSpec, String> {
    let mut ones = 0u32;
    let mut twos = 0u32;
    for term in text.split(',') {
        let term = term.trim();
        let (base, mult) = match term.split_once('^') {
            Some((b, m)) => {
                let m: u32 = m
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad multiplicity in `{term}`"))?;
                (b.trim(), m)
            }
            None => (term, 1),
        };
        match base {
            "1" => ones += mult,
            "2" => twos += mult,
            _ => return Err(format!("unsupported radius `{base}` (only 1 and 2)")),
        }
    }
    if ones > 255 || twos > 255 {
        return Err("multiplicity too large".into());
    }
    PackingSpec::new(ones as u8, twos as u8).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_names() {
        assert_eq!(Color::One(0).to_string(), "1_a");
        assert_eq!(Color::One(1).to_string(), "1_b");
        assert_eq!(Color::Two(0).to_string(), "2_1");
        assert_eq!(Color::Two(6).to_string(), "2_7");
    }

    #[test]
    fn integer_encoding_round_trip() {
        let spec = PackingSpec::new(2, 7).unwrap();
        for c in spec.colors() {
            assert_eq!(Color::from_code(c.code(&spec), &spec), Some(c));
        }
        assert_eq!(Color::One(0).code(&spec), 1);
        assert_eq!(Color::Two(0).code(&spec), 3);
        assert_eq!(Color::Two(6).code(&spec), 9);
        assert_eq!(Slot::Uncolored.code(&spec), 0);
        assert_eq!(Slot::Undetermined1.code(&spec), -1);
        assert_eq!(Slot::from_code(-1, &spec), Some(Slot::Undetermined1));
        assert_eq!(Slot::from_code(10, &spec), None);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(parse_spec("1,2^5").unwrap(), PackingSpec::new(1, 5).unwrap());
        assert_eq!(parse_spec("1^2,2^7").unwrap(), PackingSpec::new(2, 7).unwrap());
        assert_eq!(parse_spec("2^3").unwrap(), PackingSpec::new(0, 3).unwrap());
        assert_eq!(parse_spec("1").unwrap(), PackingSpec::new(1, 0).unwrap());
        assert!(parse_spec("3^2").is_err());
        assert!(PackingSpec::new(0, 0).is_err());
    }

    #[test]
    fn spec_display() {
        assert_eq!(PackingSpec::new(1, 5).unwrap().to_string(), "(1,2^5)");
        assert_eq!(PackingSpec::new(2, 7).unwrap().to_string(), "(1^2,2^7)");
        assert_eq!(PackingSpec::new(1, 0).unwrap().to_string(), "(1)");
    }
}
