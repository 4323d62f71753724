#include "quaddec/coeffs.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "quaddec/errors.hpp"

namespace quaddec {

namespace {

template <typename Fn> Rational guarded(const char* name, std::size_t index, Fn&& fn)
{
    try {
        return fn();
    } catch (const DivisionByZero&) {
        throw RegularityError(name, index, "formula has a pole");
    }
}

} // namespace

struct RecurrenceCoeffs::State {
    Formula beta;
    Formula gamma;
    std::mutex mutex;
    std::map<std::size_t, Rational> beta_memo;
    std::map<std::size_t, Rational> gamma_memo;
};

RecurrenceCoeffs::RecurrenceCoeffs(Formula beta, Formula gamma) : state_(std::make_shared<State>())
{
    state_->beta = std::move(beta);
    state_->gamma = std::move(gamma);
}

RecurrenceCoeffs RecurrenceCoeffs::from_prefix(RecurrencePrefix prefix)
{
    auto shared = std::make_shared<const RecurrencePrefix>(std::move(prefix));
    return RecurrenceCoeffs(
        [shared](std::size_t n) {
            if (n >= shared->beta.size()) {
                throw DomainError("beta[" + std::to_string(n) + "] beyond the supplied coefficients");
            }
            return shared->beta[n];
        },
        [shared](std::size_t k) {
            if (k == 0 || k > shared->gamma.size()) {
                throw DomainError("gamma[" + std::to_string(k) + "] beyond the supplied coefficients");
            }
            return shared->gamma[k - 1];
        });
}

Rational RecurrenceCoeffs::beta(std::size_t n) const
{
    {
        std::lock_guard lock(state_->mutex);
        if (auto it = state_->beta_memo.find(n); it != state_->beta_memo.end()) {
            return it->second;
        }
    }
    Rational value = guarded("beta", n, [&] { return state_->beta(n); });
    std::lock_guard lock(state_->mutex);
    return state_->beta_memo.emplace(n, std::move(value)).first->second;
}

Rational RecurrenceCoeffs::gamma(std::size_t k) const
{
    if (k == 0) {
        throw DomainError("gamma is indexed from 1");
    }
    {
        std::lock_guard lock(state_->mutex);
        if (auto it = state_->gamma_memo.find(k); it != state_->gamma_memo.end()) {
            return it->second;
        }
    }
    Rational value = guarded("gamma", k, [&] { return state_->gamma(k); });
    if (value.is_zero()) {
        throw RegularityError("gamma", k, "vanishes (regularity violated)");
    }
    std::lock_guard lock(state_->mutex);
    return state_->gamma_memo.emplace(k, std::move(value)).first->second;
}

RecurrencePrefix RecurrenceCoeffs::prefix(std::size_t count) const
{
    RecurrencePrefix out;
    out.beta.reserve(count);
    out.gamma.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        out.beta.push_back(beta(n));
        out.gamma.push_back(gamma(n + 1));
    }
    return out;
}

struct StructureCoeffs::State {
    BetaFormula beta;
    ChiFormula chi;
    std::mutex mutex;
    std::map<std::size_t, Rational> beta_memo;
    std::map<std::pair<std::size_t, std::size_t>, Rational> chi_memo;
};

StructureCoeffs::StructureCoeffs(BetaFormula beta, ChiFormula chi) : state_(std::make_shared<State>())
{
    state_->beta = std::move(beta);
    state_->chi = std::move(chi);
}

StructureCoeffs StructureCoeffs::from_table(StructureTable table)
{
    auto shared = std::make_shared<const StructureTable>(std::move(table));
    return StructureCoeffs(
        [shared](std::size_t n) {
            if (n >= shared->beta.size()) {
                throw DomainError("beta[" + std::to_string(n) + "] beyond the supplied coefficients");
            }
            return shared->beta[n];
        },
        [shared](std::size_t n, std::size_t nu) {
            if (n >= shared->chi.size() || nu >= shared->chi[n].size()) {
                throw DomainError("chi[" + std::to_string(n) + "," + std::to_string(nu) +
                                  "] beyond the supplied coefficients");
            }
            return shared->chi[n][nu];
        });
}

StructureCoeffs StructureCoeffs::from_recurrence(const RecurrenceCoeffs& rc)
{
    return StructureCoeffs(
        [rc](std::size_t n) { return rc.beta(n); },
        [rc](std::size_t n, std::size_t nu) { return nu == n ? rc.gamma(n + 1) : Rational(0); });
}

Rational StructureCoeffs::beta(std::size_t n) const
{
    {
        std::lock_guard lock(state_->mutex);
        if (auto it = state_->beta_memo.find(n); it != state_->beta_memo.end()) {
            return it->second;
        }
    }
    Rational value = guarded("beta", n, [&] { return state_->beta(n); });
    std::lock_guard lock(state_->mutex);
    return state_->beta_memo.emplace(n, std::move(value)).first->second;
}

Rational StructureCoeffs::chi(std::size_t n, std::size_t nu) const
{
    if (nu > n) {
        throw DomainError("chi[n,nu] requires nu <= n");
    }
    const auto key = std::make_pair(n, nu);
    {
        std::lock_guard lock(state_->mutex);
        if (auto it = state_->chi_memo.find(key); it != state_->chi_memo.end()) {
            return it->second;
        }
    }
    Rational value = guarded("chi", n, [&] { return state_->chi(n, nu); });
    std::lock_guard lock(state_->mutex);
    return state_->chi_memo.emplace(key, std::move(value)).first->second;
}

StructureTable StructureCoeffs::table(std::size_t count) const
{
    StructureTable out;
    for (std::size_t n = 0; n < count; ++n) {
        out.beta.push_back(beta(n));
    }
    for (std::size_t n = 0; n + 1 < count; ++n) {
        std::vector<Rational> row;
        for (std::size_t nu = 0; nu <= n; ++nu) {
            row.push_back(chi(n, nu));
        }
        out.chi.push_back(std::move(row));
    }
    return out;
}

} // namespace quaddec
