use num_bigint::BigInt;
use serde_json::Value;

use crate::domain::IntVec;

/// Largest magnitude a JSON number can carry without loss in IEEE doubles.
const SAFE_INTEGER: i64 = (1 << 53) - 1;

/// Integers beyond the 53-bit safe range are written as decimal strings.
pub fn int_to_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) if (-SAFE_INTEGER..=SAFE_INTEGER).contains(&small) => Value::from(small),
        _ => Value::String(v.to_string()),
    }
}

/// Accepts an integer-valued JSON number or a decimal string.
pub fn int_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from)),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

pub fn vec_to_json(v: &IntVec) -> Value {
    Value::Array(v.entries().iter().map(int_to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_values_become_strings() {
        assert_eq!(int_to_json(&BigInt::from(42)), Value::from(42));
        assert_eq!(
            int_to_json(&BigInt::from(SAFE_INTEGER)),
            Value::from(SAFE_INTEGER)
        );
        let big = BigInt::from(SAFE_INTEGER) + 1;
        assert_eq!(int_to_json(&big), Value::String("9007199254740992".into()));
        assert_eq!(
            int_to_json(&-big.clone()),
            Value::String("-9007199254740992".into())
        );
        assert_eq!(int_from_json(&int_to_json(&big)), Some(big));
    }

    #[test]
    fn rejects_non_integers() {
        assert_eq!(int_from_json(&serde_json::json!(1.5)), None);
        assert_eq!(int_from_json(&serde_json::json!("x")), None);
        assert_eq!(int_from_json(&serde_json::json!(null)), None);
    }
}
