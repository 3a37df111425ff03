//! Cartan data, derived quantities and the parameters of the split
//! iquantum group.
//!
//! Only fully split data are modelled: every index is its own orbit and no
//! black nodes exist, so every index carries a parameter `varsigma_i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::qfield::{qpow, RatFunc};

pub const MAX_RANK: usize = 4;

/// A validated Cartan datum `(I, .)` given by its symmetric pairing matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    pairing: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    eps: Vec<i64>,
}

impl CartanDatum {
    /// Validates the pairing `i.j` and derives `a_ij = 2(i.j)/(i.i)` and
    /// `eps_i = (i.i)/2`.
    pub fn new(pairing: Vec<Vec<i64>>) -> Result<Self> {
        let n = pairing.len();
        if n == 0 || n > MAX_RANK {
            return Err(Error::InvalidDatum(format!(
                "rank must be between 1 and {MAX_RANK}, got {n}"
            )));
        }
        for (i, row) in pairing.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidDatum(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if pairing[i][j] != pairing[j][i] {
                    return Err(Error::InvalidDatum(format!(
                        "pairing is not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
            let d = pairing[i][i];
            if d <= 0 || d % 2 != 0 {
                return Err(Error::InvalidDatum(format!(
                    "{0}.{0} = {d} must be a positive even integer",
                    i + 1
                )));
            }
        }
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let num = 2 * pairing[i][j];
                let d = pairing[i][i];
                if num % d != 0 {
                    return Err(Error::InvalidDatum(format!(
                        "a_{}{} = 2({}.{})/({}.{}) is not an integer",
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 1,
                        i + 1,
                        i + 1
                    )));
                }
                cartan[i][j] = num / d;
                if i != j && cartan[i][j] > 0 {
                    return Err(Error::InvalidDatum(format!(
                        "a_{}{} = {} must be nonpositive",
                        i + 1,
                        j + 1,
                        cartan[i][j]
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidDatum(format!(
                        "a_{}{} and a_{}{} must vanish together",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let eps = (0..n).map(|i| pairing[i][i] / 2).collect();
        Ok(Self { pairing, cartan, eps })
    }

    /// Builds a datum of a named finite type: `A1`..`A4`, `A1xA1`, `B2`,
    /// `B3`, `C3`, `G2`, or the rank 2 Kac-Moody types `KM(a,b)` meaning
    /// `a_12 = -a`, `a_21 = -b` with `a*b >= 4` (pairing scaled to stay integral).
    pub fn of_type(name: &str) -> Result<Self> {
        let m: Vec<Vec<i64>> = match name.to_ascii_uppercase().as_str() {
            "A1" => vec![vec![2]],
            "A1XA1" => vec![vec![2, 0], vec![0, 2]],
            "A2" => vec![vec![2, -1], vec![-1, 2]],
            "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            "A4" => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ],
            "B2" => vec![vec![4, -2], vec![-2, 2]],
            "B3" => vec![vec![4, -2, 0], vec![-2, 4, -2], vec![0, -2, 2]],
            "C3" => vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 4]],
            "G2" => vec![vec![6, -3], vec![-3, 2]],
            other => {
                if let Some(inner) = other.strip_prefix("KM(").and_then(|s| s.strip_suffix(')')) {
                    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
                    if parts.len() == 2 {
                        if let (Ok(a), Ok(b)) = (parts[0].parse::<i64>(), parts[1].parse::<i64>()) {
                            return Self::rank_two(-a, -b);
                        }
                    }
                }
                return Err(Error::InvalidDatum(format!("unknown Cartan type {name:?}")));
            }
        };
        Self::new(m)
    }

    /// The rank 2 datum with Cartan entries `a_12 = a12`, `a_21 = a21`
    /// (both nonpositive, both zero or both nonzero).
    pub fn rank_two(a12: i64, a21: i64) -> Result<Self> {
        if a12 > 0 || a21 > 0 || ((a12 == 0) != (a21 == 0)) {
            return Err(Error::InvalidDatum(format!(
                "invalid rank two Cartan entries ({a12}, {a21})"
            )));
        }
        if a12 == 0 {
            return Self::new(vec![vec![2, 0], vec![0, 2]]);
        }
        // eps_1 a_12 = eps_2 a_21: take eps_1 = |a21|, eps_2 = |a12| over their gcd
        let g = num_integer::gcd(a12, a21);
        let (e1, e2) = (-a21 / g, -a12 / g);
        let ij = e1 * a12;
        Self::new(vec![vec![2 * e1, ij], vec![ij, 2 * e2]])
    }

    pub fn rank(&self) -> usize {
        self.eps.len()
    }

    /// The symmetric pairing `i.j`.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.pairing[i][j]
    }

    pub fn pairing_matrix(&self) -> &[Vec<i64>] {
        &self.pairing
    }

    /// `a_ij`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn eps(&self, i: usize) -> i64 {
        self.eps[i]
    }

    /// `q_i = q^{eps_i}`.
    pub fn q_i(&self, i: usize) -> RatFunc {
        qpow(self.eps[i] as i32)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::UnknownIndex {
                index: i,
                rank: self.rank(),
            })
        }
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .pairing
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl fmt::Debug for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CartanDatum{self}")
    }
}

/// Whether the q-Serre relations are imposed. `Off` gives the algebra
/// generated by `E_i, F_i, K_i^{+-1}` subject only to the torus and
/// commutator relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SerreMode {
    On,
    Off,
}

impl fmt::Display for SerreMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SerreMode::On => "on",
            SerreMode::Off => "off",
        })
    }
}

/// Parameters `varsigma_i` of the split iquantum group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IParams {
    varsigma: Vec<RatFunc>,
    pub serre_mode: SerreMode,
}

impl IParams {
    /// `varsigma_i = q_i^-1` for every `i`, Serre relations on.
    pub fn default_for(datum: &CartanDatum) -> Self {
        Self {
            varsigma: (0..datum.rank()).map(|i| qpow(-(datum.eps(i) as i32))).collect(),
            serre_mode: SerreMode::On,
        }
    }

    pub fn new(varsigma: Vec<RatFunc>, serre_mode: SerreMode) -> Result<Self> {
        if let Some(i) = varsigma.iter().position(RatFunc::is_zero) {
            return Err(Error::InvalidParameter(format!("varsigma_{} must be nonzero", i + 1)));
        }
        Ok(Self { varsigma, serre_mode })
    }

    pub fn varsigma(&self, i: usize) -> &RatFunc {
        &self.varsigma[i]
    }

    pub fn varsigmas(&self) -> &[RatFunc] {
        &self.varsigma
    }

    pub fn set_varsigma(&mut self, i: usize, value: RatFunc) -> Result<()> {
        if i >= self.varsigma.len() {
            return Err(Error::UnknownIndex {
                index: i,
                rank: self.varsigma.len(),
            });
        }
        if value.is_zero() {
            return Err(Error::InvalidParameter(format!("varsigma_{} must be nonzero", i + 1)));
        }
        self.varsigma[i] = value;
        Ok(())
    }

    pub fn with_varsigma(mut self, i: usize, value: RatFunc) -> Result<Self> {
        self.set_varsigma(i, value)?;
        Ok(self)
    }

    pub fn with_serre_mode(mut self, mode: SerreMode) -> Self {
        self.serre_mode = mode;
        self
    }

    pub fn rank(&self) -> usize {
        self.varsigma.len()
    }
}

impl fmt::Display for IParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.varsigma.iter().map(|v| v.to_string()).collect();
        write!(f, "varsigma=({}) serre_mode={}", vs.join(","), self.serre_mode)
    }
}

/// `default_params` under its operation name.
pub fn default_params(datum: &CartanDatum) -> IParams {
    IParams::default_for(datum)
}

/// `build_datum` under its operation name.
pub fn build_datum(pairing: Vec<Vec<i64>>) -> Result<CartanDatum> {
    CartanDatum::new(pairing)
}
