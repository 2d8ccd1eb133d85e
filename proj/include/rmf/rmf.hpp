#ifndef RMF_RMF_HPP
#define RMF_RMF_HPP

#include "rmf/canonical.hpp"
#include "rmf/census.hpp"
#include "rmf/decograph.hpp"
#include "rmf/enumerator.hpp"
#include "rmf/error.hpp"
#include "rmf/euler.hpp"
#include "rmf/graph_io.hpp"
#include "rmf/naive.hpp"
#include "rmf/strata.hpp"
#include "rmf/topotype.hpp"

#endif  // RMF_RMF_HPP
