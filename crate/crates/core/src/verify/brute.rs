/// Number of partitions of `n` into parts of size at most `max`, by direct
/// recursion over the largest part. Deliberately naive: it shares nothing
/// with the series machinery it is used to check.
pub fn count_partitions(n: u32, max: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=n.min(max)).map(|k| count_partitions(n - k, k)).sum()
}

/// `p(n)`.
pub fn partition_number(n: u32) -> u64 {
    count_partitions(n, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(partition_number(n as u32), *w);
        }
        assert_eq!(partition_number(40), 37338);
    }
}
