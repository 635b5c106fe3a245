use std::fmt;

use serde::{Deserialize, Serialize};

use super::ObjectError;

/// A lattice path step. Ordered so that `D < F < U`, matching the byte
/// order of the letters in the canonical word encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    D,
    F,
    U,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::F => 0,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::F => 'F',
        }
    }

    fn parse(c: char) -> Result<Self, ObjectError> {
        match c {
            'U' | 'u' => Ok(Step::U),
            'D' | 'd' => Ok(Step::D),
            'F' | 'f' => Ok(Step::F),
            other => Err(ObjectError::BadStep(other)),
        }
    }
}

fn parse_word(word: &str) -> Result<Vec<Step>, ObjectError> {
    word.chars()
        .filter(|c| !c.is_whitespace())
        .map(Step::parse)
        .collect()
}

/// Checks that the walk stays weakly above the axis and ends on it.
fn check_nonnegative(steps: &[Step]) -> Result<(), ObjectError> {
    let mut h = 0i64;
    for (i, s) in steps.iter().enumerate() {
        h += s.delta();
        if h < 0 {
            return Err(ObjectError::BelowAxis { step: i + 1 });
        }
    }
    if h != 0 {
        return Err(ObjectError::Unbalanced { height: h });
    }
    Ok(())
}

fn write_word(steps: &[Step], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for s in steps {
        write!(f, "{}", s.letter())?;
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct WordRepr {
    word: String,
}

/// A Dyck path over `{U, D}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordRepr", into = "WordRepr")]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Peak and valley statistics of a Dyck path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DyckStats {
    pub semilength: usize,
    pub nbp: usize,
    pub sump: usize,
    pub nbv: usize,
    pub sumv: usize,
    pub hills: usize,
    pub one_valleys: usize,
    pub sum_one_valleys: usize,
    pub first_peak_height: usize,
    pub avoids3: bool,
}

impl DyckStats {
    pub const NAMES: [&'static str; 10] = [
        "semilength",
        "nbp",
        "sump",
        "nbv",
        "sumv",
        "hills",
        "oneValleys",
        "sumOneValleys",
        "firstPeakHeight",
        "avoids3",
    ];

    pub fn get(&self, name: &str) -> Option<usize> {
        Some(match name {
            "semilength" => self.semilength,
            "nbp" => self.nbp,
            "sump" => self.sump,
            "nbv" => self.nbv,
            "sumv" => self.sumv,
            "hills" => self.hills,
            "oneValleys" => self.one_valleys,
            "sumOneValleys" => self.sum_one_valleys,
            "firstPeakHeight" => self.first_peak_height,
            "avoids3" => self.avoids3 as usize,
            _ => return None,
        })
    }
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, ObjectError> {
        if steps.contains(&Step::F) {
            return Err(ObjectError::FlatInDyck);
        }
        check_nonnegative(&steps)?;
        Ok(Self { steps })
    }

    pub fn parse(word: &str) -> Result<Self, ObjectError> {
        Self::new(parse_word(word)?)
    }

    pub fn empty() -> Self {
        Self { steps: Vec::new() }
    }

    /// `U^n D^n`-style run-length construction: `runs` alternates up-runs
    /// and down-runs starting with an up-run.
    pub fn from_runs(runs: &[(usize, usize)]) -> Result<Self, ObjectError> {
        let mut steps = Vec::new();
        for &(up, down) in runs {
            steps.extend(std::iter::repeat_n(Step::U, up));
            steps.extend(std::iter::repeat_n(Step::D, down));
        }
        Self::new(steps)
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(Self::new(steps.clone()).is_ok());
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights of the peaks, left to right.
    pub fn peak_heights(&self) -> Vec<usize> {
        self.turns(Step::U, Step::D)
    }

    /// Heights of the valleys, left to right.
    pub fn valley_heights(&self) -> Vec<usize> {
        self.turns(Step::D, Step::U)
    }

    fn turns(&self, first: Step, second: Step) -> Vec<usize> {
        let mut h = 0i64;
        let mut out = Vec::new();
        for w in self.steps.windows(2) {
            h += w[0].delta();
            if w[0] == first && w[1] == second {
                out.push(h as usize);
            }
        }
        out
    }

    /// True when the path has no `UUU` and no `DDD` factor.
    pub fn avoids_triples(&self) -> bool {
        !self.steps.windows(3).any(|w| w[0] == w[1] && w[1] == w[2])
    }

    pub fn stats(&self) -> DyckStats {
        let peaks = self.peak_heights();
        let valleys = self.valley_heights();
        let one: Vec<usize> = valleys.iter().copied().filter(|&v| v >= 1).collect();
        DyckStats {
            semilength: self.semilength(),
            nbp: peaks.len(),
            sump: peaks.iter().sum(),
            nbv: valleys.len(),
            sumv: valleys.iter().sum(),
            hills: peaks.iter().filter(|&&h| h == 1).count(),
            one_valleys: one.len(),
            sum_one_valleys: one.iter().sum(),
            first_peak_height: peaks.first().copied().unwrap_or(0),
            avoids3: self.avoids_triples(),
        }
    }

    /// Maximal runs as `(ups, downs)` pairs.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        let mut prev = None;
        for &s in &self.steps {
            match s {
                Step::U => {
                    if prev != Some(Step::U) {
                        runs.push((0, 0));
                    }
                    runs.last_mut().unwrap().0 += 1;
                }
                Step::D => runs.last_mut().expect("Dyck path starts with U").1 += 1,
                Step::F => unreachable!("Dyck paths have no flat steps"),
            }
            prev = Some(s);
        }
        runs
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(&self.steps, f)
    }
}

impl TryFrom<WordRepr> for DyckPath {
    type Error = ObjectError;
    fn try_from(w: WordRepr) -> Result<Self, ObjectError> {
        Self::parse(&w.word)
    }
}

impl From<DyckPath> for WordRepr {
    fn from(p: DyckPath) -> Self {
        WordRepr {
            word: p.to_string(),
        }
    }
}

/// A Motzkin path over `{U, D, F}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordRepr", into = "WordRepr")]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MotzkinStats {
    pub steps: usize,
    pub peakless: bool,
    pub axis_steps: usize,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, ObjectError> {
        check_nonnegative(&steps)?;
        Ok(Self { steps })
    }

    pub fn parse(word: &str) -> Result<Self, ObjectError> {
        Self::new(parse_word(word)?)
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(Self::new(steps.clone()).is_ok());
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// No `UD` factor.
    pub fn is_peakless(&self) -> bool {
        !self
            .steps
            .windows(2)
            .any(|w| w[0] == Step::U && w[1] == Step::D)
    }

    /// Number of steps that end on the x-axis.
    pub fn axis_steps(&self) -> usize {
        axis_steps(&self.steps)
    }

    pub fn stats(&self) -> MotzkinStats {
        MotzkinStats {
            steps: self.len(),
            peakless: self.is_peakless(),
            axis_steps: self.axis_steps(),
        }
    }
}

pub(crate) fn axis_steps(steps: &[Step]) -> usize {
    let mut h = 0i64;
    let mut n = 0;
    for s in steps {
        h += s.delta();
        if h == 0 {
            n += 1;
        }
    }
    n
}

/// Index just past the step that first returns the walk to height 0,
/// given that `steps[0]` is an up-step.
pub(crate) fn first_return(steps: &[Step]) -> usize {
    let mut h = 0i64;
    for (i, s) in steps.iter().enumerate() {
        h += s.delta();
        if h == 0 {
            return i + 1;
        }
    }
    unreachable!("balanced path returns to the axis")
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(&self.steps, f)
    }
}

impl TryFrom<WordRepr> for MotzkinPath {
    type Error = ObjectError;
    fn try_from(w: WordRepr) -> Result<Self, ObjectError> {
        Self::parse(&w.word)
    }
}

impl From<MotzkinPath> for WordRepr {
    fn from(p: MotzkinPath) -> Self {
        WordRepr {
            word: p.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_profile() {
        let d = DyckPath::from_runs(&[(5, 3), (3, 1), (2, 6), (2, 1), (3, 4)]).unwrap();
        assert_eq!(d.peak_heights(), vec![5, 5, 6, 2, 4]);
        assert_eq!(d.valley_heights(), vec![2, 4, 0, 1]);
        let s = d.stats();
        assert_eq!(
            (s.semilength, s.nbp, s.sump, s.nbv, s.sumv),
            (15, 5, 22, 4, 7)
        );
        assert_eq!((s.one_valleys, s.sum_one_valleys), (3, 7));
        assert_eq!(d.runs(), vec![(5, 3), (3, 1), (2, 6), (2, 1), (3, 4)]);
    }

    #[test]
    fn small_paths() {
        let s = DyckPath::parse("UD").unwrap().stats();
        assert_eq!((s.nbp, s.sump, s.sumv, s.hills), (1, 1, 0, 1));
        let s = DyckPath::parse("UUDUDD").unwrap().stats();
        assert_eq!((s.nbp, s.sump, s.sumv), (2, 4, 1));
        assert_eq!((s.one_valleys, s.sum_one_valleys, s.hills), (1, 1, 0));
        assert!(s.avoids3);
        assert!(!DyckPath::parse("UUUDDD").unwrap().avoids_triples());
        let e = DyckPath::empty().stats();
        assert_eq!((e.nbp, e.nbv, e.first_peak_height), (0, 0, 0));
    }

    #[test]
    fn rejects_bad_words() {
        assert_eq!(
            DyckPath::parse("DU"),
            Err(ObjectError::BelowAxis { step: 1 })
        );
        assert_eq!(
            DyckPath::parse("UUD"),
            Err(ObjectError::Unbalanced { height: 1 })
        );
        assert_eq!(DyckPath::parse("UFD"), Err(ObjectError::FlatInDyck));
        assert_eq!(DyckPath::parse("UX"), Err(ObjectError::BadStep('X')));
        assert!(MotzkinPath::parse("UFD").is_ok());
        assert!(MotzkinPath::parse("FD").is_err());
    }

    #[test]
    fn motzkin_predicates() {
        let m = MotzkinPath::parse("UFDF").unwrap();
        assert!(m.is_peakless());
        assert_eq!(m.axis_steps(), 2);
        assert!(!MotzkinPath::parse("UDFF").unwrap().is_peakless());
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"word":"UFDF"}"#);
    }
}
