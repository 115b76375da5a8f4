use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Inclusive grid `start:stop:count` with `count ≥ 2`. Endpoints accept
/// plain numbers or multiples of pi such as `pi`, `2pi`, `-pi/2`, `3pi/4`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self, String> {
        if count < 2 {
            return Err(format!("grid needs at least 2 points, got {count}"));
        }
        if !start.is_finite() || !stop.is_finite() {
            return Err("grid endpoints must be finite".into());
        }
        Ok(Self { start, stop, count })
    }

    pub fn points(&self) -> Vec<f64> {
        let last = self.count - 1;
        (0..self.count)
            .map(|k| match k {
                0 => self.start,
                k if k == last => self.stop,
                k => self.start + (self.stop - self.start) * k as f64 / last as f64,
            })
            .collect()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.count)
    }
}

fn parse_value(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let bad = || format!("cannot read `{s}` as a number");
    let Some(pos) = s.find("pi") else {
        return s.parse().map_err(|_| bad());
    };
    let factor = match &s[..pos] {
        "" | "+" => 1.0,
        "-" => -1.0,
        f => f.trim_end_matches('*').parse::<f64>().map_err(|_| bad())?,
    };
    let divisor = match s[pos + 2..].strip_prefix('/') {
        Some(d) => d.parse::<f64>().map_err(|_| bad())?,
        None if s[pos + 2..].is_empty() => 1.0,
        None => return Err(bad()),
    };
    Ok(factor * PI / divisor)
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, count] = parts[..] else {
            return Err(format!("expected start:stop:count, got `{s}`"));
        };
        let count = count.trim().parse().map_err(|_| format!("cannot read `{count}` as a point count"))?;
        Grid::new(parse_value(start)?, parse_value(stop)?, count)
    }
}
