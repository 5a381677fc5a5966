#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace branchcheck {

enum class Status { pass, fail, discrepancy_reported };

std::string_view status_name(Status s);

struct VerificationRecord {
    std::string check_id;
    std::string anchor;
    Status status = Status::pass;
    // Canonical forms and constants; always filled on non-pass records.
    std::string witness;
};

using Records = std::vector<VerificationRecord>;

/// Builds a record; `ok` picks pass or fail.
VerificationRecord make_record(std::string check_id, std::string_view anchor, bool ok, std::string witness = {});

bool any_failed(const Records& r);
void append(Records& into, Records from);

/// Two-digit zero padding used in every check id so lexicographic order
/// follows numeric order.
std::string pad2(int k);

struct AnchorEntry {
    std::string_view name;
    std::string_view description;
};

/// Every anchor a record may carry.
const std::vector<AnchorEntry>& anchor_registry();
bool anchor_known(std::string_view name);

}  // namespace branchcheck
