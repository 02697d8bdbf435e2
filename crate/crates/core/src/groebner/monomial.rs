use std::fmt;

/// Exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars].into_boxed_slice(), deg: 0 }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: exps.into_boxed_slice(), deg }
    }

    /// Squarefree monomial on the given variable indices.
    pub fn from_support<I: IntoIterator<Item = usize>>(nvars: usize, vars: I) -> Self {
        let mut m = Self::one(nvars);
        for v in vars {
            m.exps[v] += 1;
            m.deg += 1;
        }
        m
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        Self::from_support(nvars, [v])
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, v: usize) -> u16 {
        self.exps[v]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Variables with nonzero exponent, increasing.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { exps: exps.into_boxed_slice(), deg: self.deg + other.deg }
    }

    pub fn mul_var(&self, v: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[v] += 1;
        m.deg += 1;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps: Vec<u16> = other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial { exps: exps.into_boxed_slice(), deg: other.deg - self.deg }
    }

    /// Divide by one variable, if it occurs.
    pub fn div_var(&self, v: usize) -> Option<Monomial> {
        if self.exps[v] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[v] -= 1;
        m.deg -= 1;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> =
            self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exponents(exps)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Render with the given variable names, e.g. `x_1*y_2^2`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{e}", names[i])),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("v{i}")).collect();
        write!(f, "{}", self.render(&names))
    }
}
