#include "curvezeta/polar.hpp"

#include "curvezeta/errors.hpp"

namespace curvezeta {

namespace {

long points_with_f(const ResolutionGraph& g, int v) {
    long r = 0;
    for (const auto& [w, pts] : g.neighbors(v))
        if (g.vertices[w].N >= 1) r += pts;
    return r;
}

// neighbours with N >= 1 (indices), each listed once per edge
std::vector<int> f_neighbors(const ResolutionGraph& g, int v) {
    std::vector<int> out;
    for (const auto& [w, pts] : g.neighbors(v))
        if (g.vertices[w].N >= 1) out.push_back(w);
    return out;
}

} // namespace

std::vector<std::string> find_rupture_vertices(const ResolutionGraph& g) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (!g.is_exceptional(static_cast<int>(i))) continue;
        if (points_with_f(g, static_cast<int>(i)) >= 3) out.push_back(g.vertices[i].id);
    }
    return out;
}

std::vector<DeadBranch> find_dead_branches(const ResolutionGraph& g) {
    std::vector<DeadBranch> out;
    for (const std::string& rid : find_rupture_vertices(g)) {
        int r = g.require(rid);
        for (int start : f_neighbors(g, r)) {
            if (!g.is_exceptional(start)) continue;
            // walk away from the rupture through degree-2 interior vertices
            std::vector<std::string> chain;
            int prev = r, cur = start;
            bool dead_end = false;
            while (true) {
                chain.push_back(g.vertices[cur].id);
                std::vector<int> nbs = f_neighbors(g, cur);
                long pts = points_with_f(g, cur);
                if (pts == 1) { // leaf
                    dead_end = true;
                    break;
                }
                if (pts != 2 || nbs.size() != 2) break; // rupture or cluster: not a chain
                int next = nbs[0] == prev ? nbs[1] : nbs[0];
                if (!g.is_exceptional(next)) break;
                prev = cur;
                cur = next;
            }
            if (!dead_end) continue;
            const GraphVertex& leaf = g.vertex(chain.back());
            if (!leaf.first_blowup)
                throw MissingFirstBlowupFlag("vertex '" + leaf.id + "' lacks a first-blow-up flag");
            if (*leaf.first_blowup) continue; // ends at the first blow-up: excluded
            DeadBranch b;
            b.rupture = rid;
            b.chain = chain;
            out.push_back(std::move(b));
        }
    }
    // the resolution structure allows at most one dead branch per rupture vertex
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i].rupture == out[j].rupture)
                throw Error("two dead branches at rupture vertex '" + out[i].rupture + "'");
    return out;
}

std::vector<long> branch_kappas(const ResolutionGraph& g, const DeadBranch& branch) {
    ValidationReport rep;
    bool validated = false;
    std::vector<long> kappa;
    for (const std::string& id : branch.chain) {
        const GraphVertex& v = g.vertex(id);
        if (v.self_int) {
            kappa.push_back(-*v.self_int);
            continue;
        }
        if (!validated) {
            rep = validate(g);
            validated = true;
        }
        std::optional<long> k = rep.kappa_of(id);
        if (!k) throw MissingKappa("no self-intersection for '" + id + "' and validate() cannot infer one");
        kappa.push_back(*k);
    }
    return kappa;
}

BranchVerdict alpha_one_check(const ResolutionGraph& g, const DeadBranch& branch) {
    const GraphVertex& v0 = g.vertex(branch.rupture);
    const GraphVertex& v1 = g.vertex(branch.chain.front());
    BranchVerdict verdict;
    verdict.alpha1 = v1.nu - (v0.nu / Rat(v0.N)) * Rat(v1.N);
    verdict.lhs = verdict.alpha1;
    verdict.rhs = Rat(1);
    verdict.pass = verdict.alpha1 == 1;
    return verdict;
}

std::vector<Rat> branch_determinants(const std::vector<long>& kappa) {
    std::size_t r = kappa.size();
    std::vector<Rat> delta(r + 2);
    delta[r + 1] = Rat(0);
    delta[r] = Rat(1);
    for (std::size_t k = r; k-- > 0;)
        delta[k] = Rat(kappa[k]) * delta[k + 1] - delta[k + 2];
    delta.resize(r);
    return delta; // delta[k-1] = Delta_{k,r}
}

BranchVerdict kappa_identity_check(const ResolutionGraph& g, const DeadBranch& branch) {
    std::vector<long> kappa = branch_kappas(g, branch);
    std::size_t r = kappa.size();
    BranchVerdict verdict;
    verdict.deltas = branch_determinants(kappa);
    verdict.lhs = verdict.deltas[0];
    if (r == 1) {
        // E_1 is adjacent to the rupture and final: the boundary pattern
        // carries kappa_1 - 1 contact points, so the identity reads
        // Delta = (kappa_1 - 1) + 1
        verdict.rhs = Rat(kappa[0]);
    } else {
        Rat rhs = verdict.deltas[1] * Rat(kappa[0] - 1);
        for (std::size_t j = 2; j <= r - 1; ++j) {
            Rat dj = j < r ? verdict.deltas[j] : Rat(1);
            rhs += dj * Rat(kappa[j - 1] - 2);
        }
        rhs += Rat(kappa[r - 1] - 1);
        verdict.rhs = rhs;
    }
    verdict.alpha1 = alpha_one_check(g, branch).alpha1;
    verdict.pass = verdict.lhs == verdict.rhs;
    return verdict;
}

BranchVerdict open_question_check(const ResolutionGraph& g, const DeadBranch& branch,
                                  const std::map<std::string, long>& contact) {
    std::vector<long> kappa = branch_kappas(g, branch);
    std::size_t r = kappa.size();
    std::vector<long> m;
    for (const std::string& id : branch.chain) {
        auto it = contact.find(id);
        if (it == contact.end())
            throw MissingContactOrders("no contact order for branch vertex '" + id + "'");
        m.push_back(it->second);
    }
    BranchVerdict verdict;
    verdict.deltas = branch_determinants(kappa);
    verdict.lhs = verdict.deltas[0];
    Rat rhs(1);
    for (std::size_t j = 1; j <= r; ++j) {
        Rat dj = j < r ? verdict.deltas[j] : Rat(1);
        rhs += dj * Rat(m[j - 1]);
    }
    verdict.rhs = rhs;
    verdict.alpha1 = alpha_one_check(g, branch).alpha1;
    verdict.pass = verdict.lhs == verdict.rhs;
    return verdict;
}

} // namespace curvezeta
