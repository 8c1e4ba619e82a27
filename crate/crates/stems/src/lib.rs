//! Curated catalog of classical 3-primary stable stems through stem 41:
//! groups, named generators, image-of-J groups, products and Toda-bracket
//! facts. The catalog is data (a bundled JSON-lines fixture, one fact per
//! line, each carrying a self-contained justification note) validated by
//! code; nothing here is recomputed from first principles.

use std::collections::BTreeMap;

use grp3::FinAbelian3Group;
use serde::Deserialize;

/// Largest stem the catalog answers for (everything above stem 40 that the
/// tables consume is zero, so 41 is recorded implicitly).
pub const MAX_STEM: u32 = 41;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum StemsError {
    #[error("stem {0} outside the catalog range 0..={MAX_STEM}")]
    OutOfRange(u32),
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("catalog fixture is malformed: {0}")]
    BadCatalog(String),
}

/// A named element of a stable stem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedClass {
    pub name: String,
    pub stem: u32,
    /// The element has order 3^order_exp.
    pub order_exp: u32,
    /// Adams filtration, when the bundled chart covers the stem.
    pub filtration: Option<u32>,
    pub in_image_of_j: bool,
    pub note: String,
}

/// How precisely a bracket value is pinned down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignStatus {
    /// The stated signed value is the bracket's value.
    Exact,
    /// Correct up to multiplication by ±1.
    Unit,
    /// The bracket contains several values; the named class is a fixed choice.
    Choice,
}

/// A recorded Toda bracket: 3-, 4- or 5-fold. The literal token "3" stands
/// for the degree-0 element 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TodaBracketFact {
    pub inputs: Vec<String>,
    /// `None` means the bracket is zero (with the stated indeterminacy).
    pub value: Option<String>,
    pub coeff: i8,
    pub sign: SignStatus,
    pub indeterminacy: String,
    pub note: String,
}

/// One stem of the catalog: its 3-complete group and generating classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StemEntry {
    pub n: u32,
    pub group: FinAbelian3Group,
    pub generators: Vec<String>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct ProductFact {
    left: String,
    right: String,
    result: Option<String>,
    coeff: i8,
    hidden: bool,
    note: String,
}

/// Result of a product lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductValue {
    Zero,
    Class { coeff: i8, name: String, hidden: bool },
    /// The catalog records nothing and the target stem is nonzero.
    Unknown,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum Row {
    Stem {
        n: u32,
        free_rank: usize,
        cyclic: Vec<u32>,
        generators: Vec<String>,
        note: String,
    },
    Class {
        name: String,
        stem: u32,
        order_exp: u32,
        filtration: Option<u32>,
        image_of_j: bool,
        note: String,
    },
    Product {
        left: String,
        right: String,
        result: Option<String>,
        coeff: i8,
        hidden: bool,
        note: String,
    },
    Bracket {
        inputs: Vec<String>,
        value: Option<String>,
        coeff: i8,
        sign: SignStatus,
        indeterminacy: String,
        note: String,
    },
}

/// The loaded, immutable catalog.
#[derive(Clone, Debug)]
pub struct Catalog {
    classes: BTreeMap<String, NamedClass>,
    stems: BTreeMap<u32, StemEntry>,
    products: Vec<ProductFact>,
    brackets: Vec<TodaBracketFact>,
}

const CATALOG_JSONL: &str = include_str!("../fixtures/catalog.jsonl");

/// 3-adic valuation.
fn ord3(mut k: u32) -> u32 {
    let mut v = 0;
    while k != 0 && k % 3 == 0 {
        k /= 3;
        v += 1;
    }
    v
}

/// The 3-primary image-of-J group: Z3 in degree 0, Z/3^{ord3(k)+1} in degree
/// 4k−1, zero otherwise.
pub fn pi_j(n: u32) -> FinAbelian3Group {
    if n == 0 {
        FinAbelian3Group::free(1)
    } else if n % 4 == 3 {
        let k = (n + 1) / 4;
        FinAbelian3Group::cyclic(ord3(k) + 1)
    } else {
        FinAbelian3Group::zero()
    }
}

impl Catalog {
    /// Parse a catalog from JSON-lines text. Every line must carry a
    /// non-empty `note` documenting the fact it states.
    pub fn parse(text: &str) -> Result<Catalog, StemsError> {
        let mut cat = Catalog {
            classes: BTreeMap::new(),
            stems: BTreeMap::new(),
            products: Vec::new(),
            brackets: Vec::new(),
        };
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row: Row = serde_json::from_str(line)
                .map_err(|e| StemsError::BadCatalog(format!("line {}: {}", lineno + 1, e)))?;
            let note = match &row {
                Row::Stem { note, .. }
                | Row::Class { note, .. }
                | Row::Product { note, .. }
                | Row::Bracket { note, .. } => note,
            };
            if note.trim().is_empty() {
                return Err(StemsError::BadCatalog(format!(
                    "line {}: missing justification note",
                    lineno + 1
                )));
            }
            match row {
                Row::Stem {
                    n,
                    free_rank,
                    cyclic,
                    generators,
                    note,
                } => {
                    let entry = StemEntry {
                        n,
                        group: FinAbelian3Group::new(free_rank, cyclic),
                        generators,
                        note,
                    };
                    if cat.stems.insert(n, entry).is_some() {
                        return Err(StemsError::BadCatalog(format!("duplicate stem {}", n)));
                    }
                }
                Row::Class {
                    name,
                    stem,
                    order_exp,
                    filtration,
                    image_of_j,
                    note,
                } => {
                    let class = NamedClass {
                        name: name.clone(),
                        stem,
                        order_exp,
                        filtration,
                        in_image_of_j: image_of_j,
                        note,
                    };
                    if cat.classes.insert(name.clone(), class).is_some() {
                        return Err(StemsError::BadCatalog(format!("duplicate class {}", name)));
                    }
                }
                Row::Product {
                    left,
                    right,
                    result,
                    coeff,
                    hidden,
                    note,
                } => cat.products.push(ProductFact {
                    left,
                    right,
                    result,
                    coeff,
                    hidden,
                    note,
                }),
                Row::Bracket {
                    inputs,
                    value,
                    coeff,
                    sign,
                    indeterminacy,
                    note,
                } => cat.brackets.push(TodaBracketFact {
                    inputs,
                    value,
                    coeff,
                    sign,
                    indeterminacy,
                    note,
                }),
            }
        }
        Ok(cat)
    }

    /// The catalog bundled with the crate.
    pub fn bundled() -> Catalog {
        Catalog::parse(CATALOG_JSONL).expect("bundled catalog parses")
    }

    /// The 3-complete stable stem π^{cl}_n.
    pub fn pi_cl(&self, n: u32) -> Result<FinAbelian3Group, StemsError> {
        if n > MAX_STEM {
            return Err(StemsError::OutOfRange(n));
        }
        Ok(self
            .stems
            .get(&n)
            .map(|e| e.group.clone())
            .unwrap_or_else(FinAbelian3Group::zero))
    }

    pub fn stem_entry(&self, n: u32) -> Option<&StemEntry> {
        self.stems.get(&n)
    }

    pub fn class(&self, name: &str) -> Option<&NamedClass> {
        self.classes.get(name)
    }

    pub fn classes(&self) -> impl Iterator<Item = &NamedClass> {
        self.classes.values()
    }

    pub fn brackets(&self) -> &[TodaBracketFact] {
        &self.brackets
    }

    /// Stem degree of a product/bracket token: "3" lives in degree 0,
    /// anything else must be a catalog class.
    fn degree(&self, token: &str) -> Result<u32, StemsError> {
        if token == "3" {
            return Ok(0);
        }
        self.classes
            .get(token)
            .map(|c| c.stem)
            .ok_or_else(|| StemsError::UnknownClass(token.to_string()))
    }

    /// Order exponent of a token; "3" has infinite order in the 3-complete
    /// 0-stem, returned as `None`.
    fn order_exp(&self, token: &str) -> Result<Option<u32>, StemsError> {
        if token == "3" {
            return Ok(None);
        }
        self.classes
            .get(token)
            .map(|c| Some(c.order_exp))
            .ok_or_else(|| StemsError::UnknownClass(token.to_string()))
    }

    /// Product of two tokens, symmetrized by graded commutativity
    /// (ab = (−1)^{|a||b|} ba) and completed by two generic rules: 3·x = 0
    /// when x has order 3, and anything landing in a zero stem is zero.
    pub fn product(&self, a: &str, b: &str) -> Result<ProductValue, StemsError> {
        let da = self.degree(a)?;
        let db = self.degree(b)?;
        for fact in &self.products {
            let (direct, coeff) = if fact.left == a && fact.right == b {
                (true, fact.coeff)
            } else if fact.left == b && fact.right == a {
                let swap = if (da * db) % 2 == 1 { -1 } else { 1 };
                (true, fact.coeff * swap)
            } else {
                (false, 0)
            };
            if direct {
                return Ok(match &fact.result {
                    None => ProductValue::Zero,
                    Some(name) => ProductValue::Class {
                        coeff,
                        name: name.clone(),
                        hidden: fact.hidden,
                    },
                });
            }
        }
        // Multiplication by 3 kills order-3 classes.
        for (x, y) in [(a, b), (b, a)] {
            if x == "3" && self.order_exp(y)? == Some(1) {
                return Ok(ProductValue::Zero);
            }
        }
        // Products landing in a zero stem vanish.
        let target = da + db;
        if target <= MAX_STEM && self.pi_cl(target)?.is_zero() {
            return Ok(ProductValue::Zero);
        }
        Ok(ProductValue::Unknown)
    }

    /// Look up a recorded bracket by its exact input sequence.
    pub fn bracket_lookup(&self, inputs: &[&str]) -> Option<&TodaBracketFact> {
        self.brackets
            .iter()
            .find(|b| b.inputs.len() == inputs.len() && b.inputs.iter().zip(inputs).all(|(x, y)| x == y))
    }

    /// The α₁-product of a catalog class, including hidden extensions
    /// (products of higher Adams filtration than the factors predict).
    pub fn hidden_alpha1_extension(&self, x: &str) -> Result<ProductValue, StemsError> {
        if self.classes.get(x).is_none() {
            return Err(StemsError::UnknownClass(x.to_string()));
        }
        self.product(x, "alpha1")
    }

    /// Check every internal-consistency property the catalog data admits;
    /// each violation becomes one line of the report. An empty report means
    /// the catalog is coherent.
    pub fn validate_catalog(&self) -> Vec<String> {
        let mut report = Vec::new();
        self.validate_stems(&mut report);
        self.validate_classes(&mut report);
        self.validate_image_of_j(&mut report);
        self.validate_products(&mut report);
        self.validate_brackets(&mut report);
        self.validate_reversals(&mut report);
        self.validate_jacobi(&mut report);
        report
    }

    fn validate_stems(&self, report: &mut Vec<String>) {
        for entry in self.stems.values() {
            let mut gen_orders = Vec::new();
            for g in &entry.generators {
                match self.classes.get(g) {
                    None => report.push(format!("stem {}: unknown generator {}", entry.n, g)),
                    Some(c) => {
                        if c.stem != entry.n {
                            report.push(format!(
                                "stem {}: generator {} lives in stem {}",
                                entry.n, g, c.stem
                            ));
                        }
                        gen_orders.push(c.order_exp);
                    }
                }
            }
            // Generator orders must multiply to the torsion order.
            let total: u64 = gen_orders.iter().map(|&e| u64::from(e)).sum();
            if entry.n > 0 && total != entry.group.torsion_length() {
                report.push(format!(
                    "stem {}: generator orders give 3^{}, group has order 3^{}",
                    entry.n,
                    total,
                    entry.group.torsion_length()
                ));
            }
        }
    }

    fn validate_classes(&self, report: &mut Vec<String>) {
        for c in self.classes.values() {
            let group = match self.pi_cl(c.stem) {
                Ok(g) => g,
                Err(_) => {
                    report.push(format!("class {}: stem {} out of range", c.name, c.stem));
                    continue;
                }
            };
            // The element's order must divide the group exponent.
            let exponent = group.cyclic.first().copied().unwrap_or(0);
            if group.free_rank == 0 && c.order_exp > exponent {
                report.push(format!(
                    "class {}: order 3^{} exceeds the exponent 3^{} of its stem",
                    c.name, c.order_exp, exponent
                ));
            }
            // α-family naming discipline: alphaN has stem 4N−1 and order 3;
            // alphabarN (N divisible by 3) has stem 4N−1 and order 3^{ord3(N)+1}.
            if let Some(n) = c.name.strip_prefix("alphabar").and_then(|s| s.parse::<u32>().ok()) {
                if c.stem != 4 * n - 1 || c.order_exp != ord3(n) + 1 {
                    report.push(format!(
                        "class {}: expected stem {} and order 3^{}",
                        c.name,
                        4 * n - 1,
                        ord3(n) + 1
                    ));
                }
            } else if let Some(n) = c.name.strip_prefix("alpha").and_then(|s| s.parse::<u32>().ok())
            {
                if c.stem != 4 * n - 1 || c.order_exp != 1 {
                    report.push(format!(
                        "class {}: expected stem {} and order 3",
                        c.name,
                        4 * n - 1
                    ));
                }
            }
        }
    }

    fn validate_image_of_j(&self, report: &mut Vec<String>) {
        for n in 0..=MAX_STEM {
            let j = pi_j(n);
            let cl = self.pi_cl(n).expect("in range");
            // Summand check: free ranks and a cyclic-exponent sub-multiset.
            let mut remaining = cl.cyclic.clone();
            let embeds = j.free_rank <= cl.free_rank
                && j.cyclic.iter().all(|e| {
                    if let Some(pos) = remaining.iter().position(|r| r == e) {
                        remaining.remove(pos);
                        true
                    } else {
                        false
                    }
                });
            if !embeds {
                report.push(format!(
                    "stem {}: image of J {} is not a summand of {}",
                    n,
                    j.display(),
                    cl.display()
                ));
            }
        }
    }

    fn validate_products(&self, report: &mut Vec<String>) {
        for fact in &self.products {
            let (da, db) = match (self.degree(&fact.left), self.degree(&fact.right)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => {
                    report.push(format!(
                        "product {}·{}: unknown factor",
                        fact.left, fact.right
                    ));
                    continue;
                }
            };
            if let Some(result) = &fact.result {
                match self.classes.get(result) {
                    None => report.push(format!(
                        "product {}·{}: unknown result {}",
                        fact.left, fact.right, result
                    )),
                    Some(c) if c.stem != da + db => report.push(format!(
                        "product {}·{}: degree {} but result {} has stem {}",
                        fact.left,
                        fact.right,
                        da + db,
                        result,
                        c.stem
                    )),
                    Some(_) => {}
                }
            }
            // Graded commutativity against any independently recorded swap.
            if let Some(swapped) = self
                .products
                .iter()
                .find(|f| f.left == fact.right && f.right == fact.left && fact.left != fact.right)
            {
                let sign = if (da * db) % 2 == 1 { -1 } else { 1 };
                if swapped.result != fact.result || swapped.coeff != fact.coeff * sign {
                    report.push(format!(
                        "products {}·{} and {}·{} violate graded commutativity",
                        fact.left, fact.right, swapped.left, swapped.right
                    ));
                }
            }
        }
    }

    fn validate_brackets(&self, report: &mut Vec<String>) {
        for fact in &self.brackets {
            let label = format!("<{}>", fact.inputs.join(", "));
            let mut degrees = Vec::new();
            let mut ok = true;
            for token in &fact.inputs {
                match self.degree(token) {
                    Ok(d) => degrees.push(d),
                    Err(_) => {
                        report.push(format!("{}: unknown input {}", label, token));
                        ok = false;
                    }
                }
            }
            if !ok {
                continue;
            }
            // An n-fold bracket raises total degree by n − 2.
            let expected = degrees.iter().sum::<u32>() + (fact.inputs.len() as u32 - 2);
            if let Some(value) = &fact.value {
                match self.classes.get(value) {
                    None => report.push(format!("{}: unknown value {}", label, value)),
                    Some(c) if c.stem != expected => report.push(format!(
                        "{}: degree {} but value {} has stem {}",
                        label, expected, value, c.stem
                    )),
                    Some(_) => {}
                }
            }
            // Defining condition for triple brackets: adjacent products vanish.
            if fact.inputs.len() == 3 {
                for pair in fact.inputs.windows(2) {
                    match self.product(&pair[0], &pair[1]) {
                        Ok(ProductValue::Zero) => {}
                        Ok(other) => report.push(format!(
                            "{}: precondition {}·{} = 0 fails ({:?})",
                            label, pair[0], pair[1], other
                        )),
                        Err(e) => report.push(format!("{}: {}", label, e)),
                    }
                }
            }
        }
    }

    /// ⟨α,β,γ⟩ = (−1)^{|α||β|+|β||γ|+|γ||α|+1} ⟨γ,β,α⟩ whenever both sides
    /// are recorded with exact signs.
    fn validate_reversals(&self, report: &mut Vec<String>) {
        for fact in &self.brackets {
            if fact.inputs.len() != 3 || fact.sign != SignStatus::Exact {
                continue;
            }
            let rev: Vec<&str> = fact.inputs.iter().rev().map(String::as_str).collect();
            let Some(other) = self.bracket_lookup(&rev) else {
                continue;
            };
            if other.sign != SignStatus::Exact {
                continue;
            }
            let d: Vec<u32> = fact
                .inputs
                .iter()
                .map(|t| self.degree(t).unwrap_or(0))
                .collect();
            let sign = if (d[0] * d[1] + d[1] * d[2] + d[2] * d[0] + 1) % 2 == 1 {
                -1
            } else {
                1
            };
            let consistent = match (&fact.value, &other.value) {
                (None, None) => true,
                (Some(v), Some(w)) => {
                    v == w && self.coeffs_equal(v, fact.coeff, other.coeff * sign)
                }
                _ => false,
            };
            if !consistent {
                report.push(format!(
                    "<{}> and its reversal disagree",
                    fact.inputs.join(", ")
                ));
            }
        }
    }

    /// Coefficients of a class compared modulo its order.
    fn coeffs_equal(&self, class: &str, a: i8, b: i8) -> bool {
        let modulus = self
            .classes
            .get(class)
            .map(|c| 3i64.pow(c.order_exp))
            .unwrap_or(3);
        (i64::from(a) - i64::from(b)).rem_euclid(modulus) == 0
    }

    /// Three-fold Jacobi identity:
    /// (−1)^{|α||γ|}⟨α,β,γ⟩ + (−1)^{|β||α|}⟨β,γ,α⟩ + (−1)^{|γ||β|}⟨γ,α,β⟩ ∋ 0,
    /// checked whenever all three cyclic rotations are recorded exactly and
    /// their values lie in one class (or vanish).
    fn validate_jacobi(&self, report: &mut Vec<String>) {
        for fact in &self.brackets {
            if fact.inputs.len() != 3 || fact.sign != SignStatus::Exact {
                continue;
            }
            let rot1: Vec<&str> = [1, 2, 0].iter().map(|&i| fact.inputs[i].as_str()).collect();
            let rot2: Vec<&str> = [2, 0, 1].iter().map(|&i| fact.inputs[i].as_str()).collect();
            let (Some(b1), Some(b2)) = (self.bracket_lookup(&rot1), self.bracket_lookup(&rot2))
            else {
                continue;
            };
            if b1.sign != SignStatus::Exact || b2.sign != SignStatus::Exact {
                continue;
            }
            let d: Vec<u32> = fact
                .inputs
                .iter()
                .map(|t| self.degree(t).unwrap_or(0))
                .collect();
            let eps = |exp: u32, c: i8| if exp % 2 == 1 { -i64::from(c) } else { i64::from(c) };
            let terms = [
                (fact.value.as_ref(), eps(d[0] * d[2], fact.coeff)),
                (b1.value.as_ref(), eps(d[1] * d[0], b1.coeff)),
                (b2.value.as_ref(), eps(d[2] * d[1], b2.coeff)),
            ];
            let names: Vec<&String> = terms.iter().filter_map(|(v, _)| *v).collect();
            if names.is_empty() {
                continue;
            }
            if !names.iter().all(|n| *n == names[0]) {
                report.push(format!(
                    "Jacobi triple of <{}>: values lie in different classes",
                    fact.inputs.join(", ")
                ));
                continue;
            }
            let total: i64 = terms.iter().filter(|(v, _)| v.is_some()).map(|(_, c)| c).sum();
            let modulus = 3i64.pow(
                self.classes
                    .get(names[0].as_str())
                    .map(|c| c.order_exp)
                    .unwrap_or(1),
            );
            if total.rem_euclid(modulus) != 0 {
                report.push(format!(
                    "Jacobi identity fails for the rotations of <{}> (sum {})",
                    fact.inputs.join(", "),
                    total
                ));
            }
        }
    }
}
