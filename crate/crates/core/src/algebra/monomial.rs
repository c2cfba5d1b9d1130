use std::fmt;

/// Generators of the algebra, including `g⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X,
    Y,
    G,
    GInv,
    Xi,
    U,
    V,
}

impl Generator {
    /// The six generators a module is specified by (`g⁻¹` is derived).
    pub const MODULE_GENERATORS: [Generator; 6] =
        [Generator::X, Generator::Y, Generator::G, Generator::Xi, Generator::U, Generator::V];

    /// Position in the normal order `x < y < g^{±1} < ξ < u < v`.
    pub fn slot(self) -> usize {
        match self {
            Generator::X => 0,
            Generator::Y => 1,
            Generator::G | Generator::GInv => 2,
            Generator::Xi => 3,
            Generator::U => 4,
            Generator::V => 5,
        }
    }

    /// ASCII name used in text forms (`gi` = g⁻¹, `xi` = ξ).
    pub fn name(self) -> &'static str {
        match self {
            Generator::X => "x",
            Generator::Y => "y",
            Generator::G => "g",
            Generator::GInv => "gi",
            Generator::Xi => "xi",
            Generator::U => "u",
            Generator::V => "v",
        }
    }

    pub fn from_name(name: &str) -> Option<Generator> {
        Some(match name {
            "x" => Generator::X,
            "y" => Generator::Y,
            "g" => Generator::G,
            "gi" => Generator::GInv,
            "xi" => Generator::Xi,
            "u" => Generator::U,
            "v" => Generator::V,
            _ => return None,
        })
    }

    /// Degree in the ℤ-grading.
    pub fn degree(self) -> i64 {
        match self {
            Generator::X | Generator::Y => -2,
            Generator::U | Generator::V => 2,
            Generator::G | Generator::GInv | Generator::Xi => 0,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `x^x y^y g^g ξ^xi u^u v^v`, always in this order. The derived ordering is
/// lexicographic on the exponent tuple.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub x: u32,
    pub y: u32,
    pub g: i64,
    pub xi: u32,
    pub u: u32,
    pub v: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { x: 0, y: 0, g: 0, xi: 0, u: 0, v: 0 };

    pub fn new(x: u32, y: u32, g: i64, xi: u32, u: u32, v: u32) -> Self {
        PbwMonomial { x, y, g, xi, u, v }
    }

    pub fn generator(t: Generator) -> Self {
        let mut m = PbwMonomial::ONE;
        match t {
            Generator::X => m.x = 1,
            Generator::Y => m.y = 1,
            Generator::G => m.g = 1,
            Generator::GInv => m.g = -1,
            Generator::Xi => m.xi = 1,
            Generator::U => m.u = 1,
            Generator::V => m.v = 1,
        }
        m
    }

    pub fn is_one(&self) -> bool {
        *self == PbwMonomial::ONE
    }

    /// Number of letters, counting `g^m` as `|m|` letters.
    pub fn length(&self) -> u64 {
        u64::from(self.x + self.y + self.xi + self.u + self.v) + self.g.unsigned_abs()
    }

    /// Degree in the ℤ-grading: `−2(a+b) + 2(i+j)`.
    pub fn grade(&self) -> i64 {
        -2 * i64::from(self.x + self.y) + 2 * i64::from(self.u + self.v)
    }

    /// Highest occupied slot of the normal order, with its letter.
    pub(crate) fn last_letter(&self) -> Option<Generator> {
        if self.v > 0 {
            Some(Generator::V)
        } else if self.u > 0 {
            Some(Generator::U)
        } else if self.xi > 0 {
            Some(Generator::Xi)
        } else if self.g > 0 {
            Some(Generator::G)
        } else if self.g < 0 {
            Some(Generator::GInv)
        } else if self.y > 0 {
            Some(Generator::Y)
        } else if self.x > 0 {
            Some(Generator::X)
        } else {
            None
        }
    }

    /// Multiplies by `t` on the right when no reordering is needed; the caller
    /// guarantees `t` does not precede the last letter.
    pub(crate) fn append(mut self, t: Generator) -> Self {
        match t {
            Generator::X => self.x += 1,
            Generator::Y => self.y += 1,
            Generator::G => self.g += 1,
            Generator::GInv => self.g -= 1,
            Generator::Xi => self.xi += 1,
            Generator::U => self.u += 1,
            Generator::V => self.v += 1,
        }
        self
    }

    /// Removes one trailing copy of `t`.
    pub(crate) fn strip(mut self, t: Generator) -> Self {
        match t {
            Generator::X => self.x -= 1,
            Generator::Y => self.y -= 1,
            Generator::G => self.g -= 1,
            Generator::GInv => self.g += 1,
            Generator::Xi => self.xi -= 1,
            Generator::U => self.u -= 1,
            Generator::V => self.v -= 1,
        }
        self
    }

    /// The monomial spelled as a word in normal order.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.length() as usize);
        w.extend(std::iter::repeat_n(Generator::X, self.x as usize));
        w.extend(std::iter::repeat_n(Generator::Y, self.y as usize));
        let gen = if self.g >= 0 { Generator::G } else { Generator::GInv };
        w.extend(std::iter::repeat_n(gen, self.g.unsigned_abs() as usize));
        w.extend(std::iter::repeat_n(Generator::Xi, self.xi as usize));
        w.extend(std::iter::repeat_n(Generator::U, self.u as usize));
        w.extend(std::iter::repeat_n(Generator::V, self.v as usize));
        w
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        let mut push = |name: &str, e: u64| match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        };
        push("x", self.x.into());
        push("y", self.y.into());
        push(if self.g >= 0 { "g" } else { "gi" }, self.g.unsigned_abs());
        push("xi", self.xi.into());
        push("u", self.u.into());
        push("v", self.v.into());
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grading() {
        assert_eq!(PbwMonomial::new(1, 1, 0, 0, 0, 0).grade(), -4);
        assert_eq!(PbwMonomial::new(0, 0, 5, 2, 0, 0).grade(), 0);
        assert_eq!(PbwMonomial::new(0, 0, 0, 0, 1, 1).grade(), 4);
    }

    #[test]
    fn text_form() {
        assert_eq!(PbwMonomial::new(2, 1, -3, 1, 0, 1).to_string(), "x^2*y*gi^3*xi*v");
        assert_eq!(PbwMonomial::ONE.to_string(), "1");
        assert_eq!(PbwMonomial::generator(Generator::G).to_string(), "g");
    }

    #[test]
    fn word_spelling() {
        let m = PbwMonomial::new(1, 0, -2, 0, 1, 0);
        assert_eq!(
            m.word(),
            vec![Generator::X, Generator::GInv, Generator::GInv, Generator::U]
        );
        assert_eq!(m.length(), 4);
    }
}
