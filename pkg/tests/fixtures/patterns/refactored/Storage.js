var eventQueue = {
    pending: [],
    Add: function (entry) {
        this.pending.push(entry);
    },
    PublishEvents: function (handler) {
        var drained = this.pending;
        this.pending = [];
        for (var i = 0; i < drained.length; i += 1) {
            handler(drained[i]);
        }
        return drained.length;
    }
};

exports.loadGameState = function (just, nothing) {
    var data = localStorage.getItem('gameState');
    if (!data) {
        return nothing;
    }
    eventQueue.Add(just(JSON.parse(data)));
    return eventQueue;
};
