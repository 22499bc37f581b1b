#pragma once

#include "wiser/channel.hpp"
#include "wiser/distribution.hpp"
#include "wiser/divergence.hpp"
#include "wiser/error.hpp"
#include "wiser/evidence.hpp"
#include "wiser/multiset.hpp"
#include "wiser/rational.hpp"
#include "wiser/sample_space.hpp"
#include "wiser/scalar.hpp"
#include "wiser/update.hpp"
#include "wiser/validity.hpp"
