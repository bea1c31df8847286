#ifndef RINGCERT_VERDICT_HPP
#define RINGCERT_VERDICT_HPP

#include <cstddef>
#include <functional>
#include <string>

namespace ringcert {

/// Outcome of a verification. A rejection carries a reason path such as
/// "rabin/check-ii/i=3/j=1" naming the first failed statement. All indices
/// in reason paths are 0-based.
struct Verdict {
    bool accepted = true;
    std::string reason;

    static Verdict accept() { return {}; }
    static Verdict reject(std::string why) { return {false, std::move(why)}; }

    explicit operator bool() const { return accepted; }

    /// Prefixes the reason path of a rejection; acceptances pass through.
    Verdict under(const std::string& prefix) const
    {
        if (accepted)
            return *this;
        return reject(prefix + "/" + reason);
    }
};

/// Evaluates check(0..count-1), possibly on several threads, and returns the
/// rejection with the smallest index (or accept). The result does not depend
/// on `threads`.
Verdict first_failure(std::size_t count, unsigned threads, const std::function<Verdict(std::size_t)>& check);

}  // namespace ringcert

#endif
