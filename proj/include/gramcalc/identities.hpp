#pragma once

#include "gramcalc/codec.hpp"
#include "gramcalc/families.hpp"
#include "gramcalc/series.hpp"

#include <functional>
#include <utility>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gramcalc {

inline constexpr int default_max_n = 12;
inline constexpr int default_oracle_cap = 8;

/// Source of family members. Tests swap in a corrupted provider to check
/// that the suite notices.
using FamilyProvider = std::function<LaurentPoly(Family, int)>;

/// Everything a checker may read. Family lookups are memoized.
class CheckContext {
public:
    explicit CheckContext(FamilyProvider provider = {}, std::vector<RadicalPoint> points = {});

    LaurentPoly family(Family f, int n) const;
    /// The first supplied point usable by `form`, else the default point.
    RadicalPoint point(ClosedForm form) const;

    int oracle_cap = default_oracle_cap;

private:
    FamilyProvider provider_;
    std::vector<RadicalPoint> points_;
    mutable std::map<std::pair<Family, int>, LaurentPoly> cache_;
};

/// First failure found by a checker.
struct Witness {
    int n = 0;
    std::string lhs;
    std::string rhs;
    std::string detail; ///< which sub-statement failed

    json to_json() const;
};

using Checker = std::function<std::optional<Witness>(const CheckContext&, int lo, int hi)>;

struct IdentityCheck {
    std::string name;
    std::string description;
    int lo = 0;
    bool oracle_backed = false;
    /// Series checks read n as a truncation order.
    bool series = false;
    int hi_cap = 1 << 20;
    std::vector<ClosedForm> point_forms;
    Checker checker;
};

struct IdentityReport {
    std::string name;
    int lo = 0;
    int hi = 0;
    bool pass = true;
    std::optional<Witness> witness;
    long millis = 0;

    json to_json() const;
    /// "PASS name [lo..hi]" or "FAIL name [lo..hi] n=.. lhs=.. rhs=.."
    std::string to_text() const;
};

/// All entries, sorted by name.
const std::vector<IdentityCheck>& identity_registry();
/// Throws UnknownIdentity.
const IdentityCheck& find_identity(const std::string& name);

/// Upper end of the tested range for `max_n`.
int effective_hi(const IdentityCheck& check, int max_n, const CheckContext& ctx);

IdentityReport run_identity(const IdentityCheck& check, int max_n, const CheckContext& ctx);
IdentityReport run_identity(const std::string& name, int max_n, const std::vector<RadicalPoint>& points = {});
/// Every entry, ordered by name.
std::vector<IdentityReport> run_all(int max_n, const CheckContext& ctx = CheckContext());

/// Grammar-derived members with one coefficient of (family, n) bumped by 1.
FamilyProvider corrupted_provider(Family family, int n);

/// A printed statement that conflicts with direct derivation.
struct Erratum {
    std::string location;
    std::string printed;
    std::string corrected;
    std::string confirmation;
    /// Recomputes the evidence: true when the printed form fails and the
    /// corrected form holds.
    std::function<bool()> confirm;
};

const std::vector<Erratum>& errata();
json errata_to_json();

} // namespace gramcalc
