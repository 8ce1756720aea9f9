#include "confcarbon/error.hpp"

namespace confcarbon {

ValidationError::ValidationError(std::vector<std::string> issues)
: Error([&] {
    std::string msg = "validation failed (" + std::to_string(issues.size()) + " issue" + (issues.size() == 1 ? "" : "s") + ")";
    for (const auto& issue : issues) {
        msg += "\n  ";
        msg += issue;
    }
    return msg;
}())
, _issues(std::move(issues))
{
}

UnknownCountry::UnknownCountry(std::string countryCode, std::string context)
: Error("unknown country '" + countryCode + "'" + (context.empty() ? std::string() : " (" + context + ")"))
, _countryCode(std::move(countryCode))
{
}

}
