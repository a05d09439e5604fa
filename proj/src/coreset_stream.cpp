#include "divmax/coreset_stream.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace divmax {

StreamState::StreamState(Matroid matroid, StreamMode mode, MetricKind metric,
                          bool track_references)
    : matroid_(std::move(matroid)),
      mode_(std::move(mode)),
      metric_kind_(metric),
      track_(track_references) {}

int StreamState::num_delegates() const {
  int n = 0;
  for (const Center& c : centers_) n += static_cast<int>(c.delegates.size());
  return n;
}

int StreamState::max_delegate_set_size() const {
  int n = 0;
  for (const Center& c : centers_) n = std::max(n, static_cast<int>(c.delegates.size()));
  return n;
}

std::vector<std::vector<std::string>> StreamState::delegate_ids() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(centers_.size());
  for (const Center& c : centers_) {
    std::vector<std::string> ids;
    ids.reserve(c.delegates.size());
    for (const Held& h : c.delegates) ids.push_back(h.p.id);
    out.push_back(std::move(ids));
  }
  return out;
}

std::vector<int> StreamState::center_indices() const {
  std::vector<int> out;
  out.reserve(centers_.size());
  for (const Center& c : centers_) out.push_back(c.self.index);
  return out;
}

const std::vector<int>& StreamState::reference_centers() const {
  if (!track_) throw std::logic_error("reference tracking is disabled for this state");
  return reference_;
}

double StreamState::nearest_center(const Point& x, int& pos) const {
  double best = std::numeric_limits<double>::infinity();
  pos = -1;
  for (size_t i = 0; i < centers_.size(); ++i) {
    const double dist = distance(x, centers_[i].self.p, metric_kind_);
    if (dist < best) {
      best = dist;
      pos = static_cast<int>(i);
    }
  }
  return best;
}

bool StreamState::delegates_independent_k(const Center& z) const {
  const int k = std::holds_alternative<StreamEpsilonMode>(mode_)
                    ? std::get<StreamEpsilonMode>(mode_).k
                    : std::get<StreamTauMode>(mode_).k;
  if (static_cast<int>(z.delegates.size()) != k) return false;
  std::vector<const Point*> pts;
  pts.reserve(z.delegates.size());
  for (const Held& h : z.delegates) pts.push_back(&h.p);
  return is_independent_pts(matroid_, pts);
}

void StreamState::collapse_to_witness(Center& z) {
  const int k = std::holds_alternative<StreamEpsilonMode>(mode_)
                    ? std::get<StreamEpsilonMode>(mode_).k
                    : std::get<StreamTauMode>(mode_).k;
  // Greedy growth over the delegates in insertion order; exact for
  // matroids, and keeps the center itself (a singleton is independent).
  std::vector<size_t> chosen;
  std::vector<const Point*> pts;
  for (size_t i = 0; i < z.delegates.size() && static_cast<int>(chosen.size()) < k; ++i) {
    pts.push_back(&z.delegates[i].p);
    if (is_independent_pts(matroid_, pts)) {
      chosen.push_back(i);
    } else {
      pts.pop_back();
    }
  }
  if (static_cast<int>(chosen.size()) < k) return;  // no witness yet
  std::vector<Held> witness;
  witness.reserve(chosen.size());
  for (size_t i : chosen) witness.push_back(std::move(z.delegates[i]));
  z.delegates = std::move(witness);
}

void StreamState::handle(const Point& x, int index, Center& z) {
  if (delegates_independent_k(z)) return;  // discard x
  if (matroid_.is_partition()) {
    std::vector<const Point*> pts;
    pts.reserve(z.delegates.size() + 1);
    for (const Held& h : z.delegates) pts.push_back(&h.p);
    pts.push_back(&x);
    if (is_independent_pts(matroid_, pts)) z.delegates.push_back(Held{x, index});
    return;
  }
  const int k = std::holds_alternative<StreamEpsilonMode>(mode_)
                    ? std::get<StreamEpsilonMode>(mode_).k
                    : std::get<StreamTauMode>(mode_).k;
  if (matroid_.is_transversal()) {
    const auto& active = matroid_.as_transversal().categories;
    bool shortCategory = false;
    for (const std::string& cat : x.categories) {
      if (!active.contains(cat)) continue;
      int members = 0;
      for (const Held& h : z.delegates) {
        const auto& pc = h.p.categories;
        if (std::find(pc.begin(), pc.end(), cat) != pc.end()) ++members;
      }
      if (members < k) {
        shortCategory = true;
        break;
      }
    }
    if (!shortCategory) return;  // discard x
  }
  z.delegates.push_back(Held{x, index});
  collapse_to_witness(z);
}

void StreamState::restructure(double threshold) {
  std::vector<Center> kept;
  std::vector<Center> dropped;
  for (Center& c : centers_) {
    bool separated = true;
    for (const Center& k : kept) {
      if (distance(c.self.p, k.self.p, metric_kind_) <= threshold) {
        separated = false;
        break;
      }
    }
    if (separated) {
      kept.push_back(std::move(c));
    } else {
      dropped.push_back(std::move(c));
    }
  }
  centers_ = std::move(kept);
  std::map<int, int> remap;  // dropped center stream index -> kept center stream index
  for (Center& z : dropped) {
    int pos = -1;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < centers_.size(); ++i) {
      const double dist = distance(z.self.p, centers_[i].self.p, metric_kind_);
      if (dist < best) {
        best = dist;
        pos = static_cast<int>(i);
      }
    }
    remap[z.self.index] = centers_[static_cast<size_t>(pos)].self.index;
    for (Held& h : z.delegates)
      handle(h.p, h.index, centers_[static_cast<size_t>(pos)]);
  }
  if (track_ && !remap.empty()) {
    for (int& r : reference_) {
      auto it = remap.find(r);
      if (it != remap.end()) r = it->second;
    }
  }
}

void StreamState::push(const Point& x, int index) {
  if (count_ == 0) {
    pending_ = Held{x, index};
    first_ = Held{x, index};
    if (track_) reference_.push_back(index);
    count_ = 1;
    return;
  }
  if (count_ == 1) {
    radius_estimate_ = distance(first_->p, x, metric_kind_);
    centers_.push_back(Center{*pending_, {*pending_}});
    centers_.push_back(Center{Held{x, index}, {Held{x, index}}});
    pending_.reset();
    if (track_) reference_.push_back(index);
    count_ = 2;
    return;
  }

  if (const auto* em = std::get_if<StreamEpsilonMode>(&mode_)) {
    const double accept = 2.0 * em->epsilon * radius_estimate_ / (em->c * em->k);
    int pos = -1;
    const double dist = nearest_center(x, pos);
    if (dist > accept) {
      centers_.push_back(Center{Held{x, index}, {Held{x, index}}});
      if (track_) reference_.push_back(index);
    } else {
      if (track_) reference_.push_back(centers_[static_cast<size_t>(pos)].self.index);
      handle(x, index, centers_[static_cast<size_t>(pos)]);
    }
    const double toFirst = distance(x, first_->p, metric_kind_);
    if (toFirst > 2.0 * radius_estimate_) {
      radius_estimate_ = toFirst;
      restructure(em->epsilon * radius_estimate_ / (em->c * em->k));
    }
  } else {
    const auto& tm = std::get<StreamTauMode>(mode_);
    int pos = -1;
    const double dist = nearest_center(x, pos);
    if (dist <= 2.0 * radius_estimate_) {
      if (track_) reference_.push_back(centers_[static_cast<size_t>(pos)].self.index);
      handle(x, index, centers_[static_cast<size_t>(pos)]);
    } else {
      centers_.push_back(Center{Held{x, index}, {Held{x, index}}});
      if (track_) reference_.push_back(index);
    }
    while (static_cast<int>(centers_.size()) > tm.tau) {
      if (radius_estimate_ == 0.0) {
        // Degenerate start (coincident first points): seed the estimate
        // with the smallest positive center separation.
        double smallest = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < centers_.size(); ++i)
          for (size_t j = i + 1; j < centers_.size(); ++j) {
            const double s = distance(centers_[i].self.p, centers_[j].self.p, metric_kind_);
            if (s > 0.0) smallest = std::min(smallest, s);
          }
        radius_estimate_ = smallest / 2.0;
      }
      restructure(radius_estimate_);
      radius_estimate_ *= 2.0;
    }
  }
  ++count_;
}

Coreset StreamState::finalize() const {
  if (count_ < 2) throw InputError("stream finalize: fewer than 2 points consumed");
  Coreset t;
  t.tau = static_cast<int>(centers_.size());
  t.per_cluster.reserve(centers_.size());
  for (const Center& c : centers_) {
    IndexSet cluster;
    cluster.reserve(c.delegates.size());
    for (const Held& h : c.delegates) cluster.push_back(h.index);
    std::sort(cluster.begin(), cluster.end());
    t.ids.insert(t.ids.end(), cluster.begin(), cluster.end());
    t.per_cluster.push_back(std::move(cluster));
  }
  std::sort(t.ids.begin(), t.ids.end());
  return t;
}

Coreset stream_coreset(const Dataset& d, const Matroid& m, const StreamMode& mode) {
  StreamState st(m, mode, d.metric(), /*track_references=*/true);
  for (int i = 0; i < d.size(); ++i) st.push(d[i], i);
  Coreset t = st.finalize();
  const std::vector<int>& ref = st.reference_centers();
  double radius = 0.0;
  for (int i = 0; i < d.size(); ++i) radius = std::max(radius, d.dist(i, ref[static_cast<size_t>(i)]));
  t.radius = radius;
  return t;
}

}  // namespace divmax
