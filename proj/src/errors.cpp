#include "agsync/errors.hpp"

namespace agsync {

OutOfRangeEntry::OutOfRangeEntry(std::size_t state_, std::size_t letter_, std::int64_t value_)
    : Error("transition out of range: delta[" + std::to_string(state_) + "][" +
            std::to_string(letter_) + "] = " + std::to_string(value_)),
      state(state_), letter(letter_), value(value_) {}

LimitExceeded::LimitExceeded(std::size_t n_, std::size_t limit_)
    : Error("state count " + std::to_string(n_) + " exceeds limit " + std::to_string(limit_)),
      n(n_), limit(limit_) {}

BudgetExceeded::BudgetExceeded(const std::string &required, std::uint64_t budget_)
    : Error("enumeration size " + required + " exceeds budget " + std::to_string(budget_)),
      budget(budget_) {}

RejectionExhausted::RejectionExhausted(std::uint64_t attempts_)
    : Error("no strongly connected automaton after " + std::to_string(attempts_) + " draws"),
      attempts(attempts_) {}

NotTransitive::NotTransitive(std::size_t p_, std::size_t q_, std::size_t r_)
    : Error("stability is not transitive on (" + std::to_string(p_) + ", " + std::to_string(q_) +
            ", " + std::to_string(r_) + ")"),
      p(p_), q(q_), r(r_) {}

NotCongruence::NotCongruence(std::size_t class_index_, std::size_t letter_)
    : Error("class " + std::to_string(class_index_) + " is split by letter " +
            std::to_string(letter_)),
      class_index(class_index_), letter(letter_) {}

BulletViolation::BulletViolation(int bullet_, const std::string &witness)
    : Error("B/S decomposition bullet " + std::to_string(bullet_) + " violated: " + witness),
      bullet(bullet_) {}

} // namespace agsync
