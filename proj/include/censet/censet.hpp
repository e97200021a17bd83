#pragma once

#include "censet/central.hpp"
#include "censet/certificate.hpp"
#include "censet/classify.hpp"
#include "censet/element.hpp"
#include "censet/error.hpp"
#include "censet/hales_jewett.hpp"
#include "censet/json_io.hpp"
#include "censet/jset.hpp"
#include "censet/semigroup.hpp"
#include "censet/sequence.hpp"
#include "censet/set_spec.hpp"
#include "censet/words.hpp"
